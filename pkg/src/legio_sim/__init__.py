"""Fault-resilient communicator protocols on a deterministic crash-stop simulator."""

__version__ = "0.1.0"
