"""
maserengine - Three-level maser heat engine simulator and work analytics
"""

__version__ = "0.1.0"
