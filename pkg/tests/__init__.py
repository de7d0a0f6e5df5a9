"""
BetaNAG test suite.
"""
