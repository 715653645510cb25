from .loaders import *
