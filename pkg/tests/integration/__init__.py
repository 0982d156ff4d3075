"""End-to-end tests of the jack-lab command line."""
