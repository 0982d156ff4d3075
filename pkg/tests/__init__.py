"""
Tests for the jacklab package.
"""
