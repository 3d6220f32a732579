"""Exact computations with module categories over commutative algebras.

Vector spaces over Q or F_p form the ambient closed symmetric monoidal
category.  On top of it live commutative algebras, their module categories
with the tensor product over the algebra, functors between module categories
and their comparison with bimodules, extension and restriction of scalars,
the correspondence between algebras under ``b⊗b'`` and lax tensor functors,
and Day convolution.
"""

__version__ = "0.1.0"
