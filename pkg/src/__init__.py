"""comax: exact comaximal graphs of Lie algebras over finite fields"""

__version__ = "0.1.0"
