"""
증인 족과 코퍼스
"""
from src.core.families.corpus import corpus, dag_size, subterms
from src.core.families.witnesses import family_Xf, parse_bits, witness_X

__all__ = ["corpus", "dag_size", "family_Xf", "parse_bits", "subterms", "witness_X"]
