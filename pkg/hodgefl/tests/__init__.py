from hodgefl.log import configure_for_tests

configure_for_tests()

del configure_for_tests
