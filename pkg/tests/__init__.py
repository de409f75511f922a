#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Tests for treegrade
"""
