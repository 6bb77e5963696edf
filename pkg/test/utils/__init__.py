# Test utilities module