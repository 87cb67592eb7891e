# d-Path Vertex Cover Kernelization Package

__version__ = '1.0.0'
