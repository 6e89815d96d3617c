"""Tests for arcscatter package."""
