"""Independent reference arithmetic used to generate parameter files and frozen fixtures.

Nothing in here imports the library; it is the yardstick the library is measured against.
"""
