"""Test suite for comax"""
