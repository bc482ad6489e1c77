import os
import tempfile
import unittest
from pathlib import Path

from delannoy_schroder.core.config.env import (
    env_search_dirs,
    find_env_file,
    get_int_env,
    get_variable_env,
)


class TestConfigEnv(unittest.TestCase):
    """Tests for delannoy_schroder.core.config.env module."""

    def test_get_variable_env_returns_existing_variable(self):
        """Test that get_variable_env returns the value of an existing environment variable."""
        os.environ["TEST_VAR_EXISTS"] = "test_value"
        result = get_variable_env("TEST_VAR_EXISTS")
        self.assertEqual(result, "test_value")
        del os.environ["TEST_VAR_EXISTS"]

    def test_get_variable_env_returns_default_when_not_set(self):
        """Test that get_variable_env returns default value when variable is not set."""
        result = get_variable_env("TEST_VAR_NOT_EXISTS", default="default_value")
        self.assertEqual(result, "default_value")

    def test_get_variable_env_raises_when_empty_not_allowed(self):
        """Test that get_variable_env raises ValueError when allow_empty=False and var not set."""
        with self.assertRaises(ValueError) as ctx:
            get_variable_env("TEST_VAR_MUST_EXIST", allow_empty=False)
        self.assertIn("TEST_VAR_MUST_EXIST", str(ctx.exception))

    def test_get_int_env_parses_integer(self):
        """Test that get_int_env converts the variable to an integer."""
        os.environ["TEST_INT_VAR"] = "42"
        try:
            self.assertEqual(get_int_env("TEST_INT_VAR", 7), 42)
        finally:
            del os.environ["TEST_INT_VAR"]

    def test_get_int_env_default_for_unset_or_empty(self):
        """Test that get_int_env falls back to the default when unset or empty."""
        self.assertEqual(get_int_env("TEST_INT_VAR_UNSET", 7), 7)
        os.environ["TEST_INT_VAR_EMPTY"] = ""
        try:
            self.assertEqual(get_int_env("TEST_INT_VAR_EMPTY", 7), 7)
        finally:
            del os.environ["TEST_INT_VAR_EMPTY"]

    def test_get_int_env_rejects_non_integer(self):
        """Test that get_int_env raises ValueError naming the variable."""
        os.environ["TEST_INT_VAR_BAD"] = "many"
        try:
            with self.assertRaises(ValueError) as ctx:
                get_int_env("TEST_INT_VAR_BAD", 1)
            self.assertIn("TEST_INT_VAR_BAD", str(ctx.exception))
        finally:
            del os.environ["TEST_INT_VAR_BAD"]

    def test_find_env_file_in_search_dir(self):
        """Test that find_env_file finds a .env file in a parent of a search directory."""
        with tempfile.TemporaryDirectory() as tmp:
            root = Path(tmp)
            (root / ".env").write_text("DELANNOY_JOBS=2\n")
            nested = root / "a" / "b"
            nested.mkdir(parents=True)
            cwd = os.getcwd()
            os.chdir(nested)
            try:
                found = find_env_file([nested])
            finally:
                os.chdir(cwd)
            self.assertIsNotNone(found)
            self.assertEqual(Path(found).resolve(), (root / ".env").resolve())

    def test_env_search_dirs_starts_at_cwd(self):
        """Test that env_search_dirs lists the working directory first and ends at the package."""
        dirs = env_search_dirs()
        self.assertEqual(dirs[0], Path.cwd())
        self.assertEqual(dirs[-1].name, "config")


if __name__ == "__main__":
    unittest.main()
