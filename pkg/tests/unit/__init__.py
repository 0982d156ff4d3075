"""Library unit tests for jacklab."""
