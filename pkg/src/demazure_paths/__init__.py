"""Demazure crystals realised on paths of the symmetric tensor crystal B^l of affine sl_n."""

from .crystal import Signature, TensorWord, classical_highest, enumerate_closure, reduce, signature, tensor, tensor_e, tensor_f
from .demazure import (DemazureSet, ReflectionTable, build_Ba, build_P_k, check_II, check_III, check_IV,
                       demazure_recursive, f_closure, lemma_pq, mixing_index, verify_theorem)
from .energy_paths import EnergyTable, GroundState, energy_table, ground_path, path_weight, wt_word_classical
from .errors import (BudgetExceeded, CrystalError, DomainError, InconsistentPropagation, LemmaViolation,
                     LevelMismatch, TruncationExhausted)
from .lattice import AffineWeight, fold, pair, reflect, sigma_weight, simple_root
from .laurent import LaurentTable, QPoly
from .symtensor import BoxElem, SymTensorCrystal, box, perfect_check

__version__ = "0.1.0"
