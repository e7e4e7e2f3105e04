"""Tests for colorpack."""
