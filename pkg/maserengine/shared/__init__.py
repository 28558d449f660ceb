"""Shared types, constants and utilities."""
