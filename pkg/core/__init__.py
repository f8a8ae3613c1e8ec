"""
graphss core module

Shared configuration, logging, monitoring and exception types used by the
filter bank library and its command-line interface.
"""

__version__ = "1.0.0"
