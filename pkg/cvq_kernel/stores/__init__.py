"""
Output stores.
"""
from cvq_kernel.stores.local import LocalStore
