"""Relations, orders and the error hierarchy."""
