"""Commuting graphs of finite groups and their surface embeddings."""

__version__ = "0.1.0"
