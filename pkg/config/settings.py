"""
Configuration settings for the Temporal Heyting Workbench.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Base directory
BASE_DIR = Path(__file__).resolve().parent.parent
EXAMPLES_DIR = BASE_DIR / "data" / "examples"

# Application Settings
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_DIR = os.getenv("THW_LOG_DIR")
DEFAULT_OUTPUT_FORMAT = os.getenv("THW_OUTPUT_FORMAT", "text")

# Parallelism
DEFAULT_JOBS = int(os.getenv("THW_JOBS", "1"))

# Algebra Settings
PARTITION_ORACLE_LIMIT = int(os.getenv("THW_PARTITION_ORACLE_LIMIT", "8"))
PRODUCT_SIZE_LIMIT = int(os.getenv("THW_PRODUCT_SIZE_LIMIT", "512"))

# Frame Settings
MAX_FRAME_POINTS = int(os.getenv("THW_MAX_FRAME_POINTS", "12"))

# Sweep Settings
RANDOM_SEED = int(os.getenv("THW_SEED", "20240601"))
FULL_SWEEPS = os.getenv("THW_FULL_SWEEPS", "0") == "1"
SWEEP_MAX_POINTS = 4 if FULL_SWEEPS else 3
FMP_MAX_POINTS = 5 if FULL_SWEEPS else 3
REACHABILITY_MAX_POINTS = 5 if FULL_SWEEPS else 3
SWEEP_SAMPLES = 1000 if FULL_SWEEPS else 60
MAX_FORMULA_DEPTH = 4
