from ginv.abelian.groups import FgElement, FgGroup, GroupHom, cokernel, direct_sum, tensor
from ginv.abelian.matrix import IntMatrix
from ginv.abelian.snf import smith_normal_form

__all__ = ['FgElement', 'FgGroup', 'GroupHom', 'IntMatrix', 'cokernel', 'direct_sum', 'smith_normal_form', 'tensor']
