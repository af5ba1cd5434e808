"""Mixed 3-Sasakian structures and Killing-Yano verification."""
__version__ = "0.1.0"
