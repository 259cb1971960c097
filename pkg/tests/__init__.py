from _pytest.assertion import register_assert_rewrite

register_assert_rewrite("tests.utils")
