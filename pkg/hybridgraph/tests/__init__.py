#
# Test module for hybridgraph.
#
# To run all tests, use ``python -m unittest discover``.
#
# To run a particular test, use e.g.
#  ``python -m unittest hybridgraph.tests.test_graph``.
#
# The tests live inside the code directory, next to the modules they cover.
#
