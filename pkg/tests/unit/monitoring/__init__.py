"""
Monitoring Tests Module
"""
