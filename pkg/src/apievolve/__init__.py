"""Example-driven migration of deprecated Android API usages in Java sources."""
