# flashmove/flash_sim/device.py
import logging
from typing import Iterable, List, Optional, Set, Tuple

import numpy as np

from ..errors import ComputabilityViolation, DeviceViolation, WriteOnceViolation
from ..gf_arith.field import FieldContext
from ..gf_arith.linalg import Echelon, matmul, reduce_vector, row_echelon
from ..instance_model.models import MoveSpec
from .models import PageState

logger = logging.getLogger(__name__)


class FlashDevice:
    """
    Simulated flash: n data blocks plus one or two auxiliary blocks of m pages.

    Every written page holds a coefficient vector over the nm original pages and
    the payload those coefficients produce. Pages are write-once between erasures;
    a write is only accepted when its coefficients are computable from what is
    currently stored.
    """

    def __init__(
        self,
        spec: MoveSpec,
        field: FieldContext,
        aux_blocks: int = 1,
        page_size: int = 16,
        seed: int = 0,
        verify_payloads: bool = False,
    ):
        if aux_blocks not in (1, 2):
            raise DeviceViolation(f"Devices carry one or two auxiliary blocks, not {aux_blocks}")
        bytes_per_symbol = field.w // 8
        if page_size <= 0 or page_size % bytes_per_symbol:
            raise DeviceViolation(f"page_size {page_size} is not a whole number of {field.w}-bit symbols")

        self.spec = spec
        self.field = field
        self.n = spec.n
        self.m = spec.m
        self.size = spec.size
        self.aux_blocks = aux_blocks
        self.page_size = page_size
        self.symbols = page_size // bytes_per_symbol
        self.verify_payloads = verify_payloads

        self.block_ids = list(range(self.n + 1)) + ([self.n + 1] if aux_blocks == 2 else [])
        slots = self.n + 2
        self._coeffs = np.zeros((slots, self.m, self.size), dtype=np.int64)
        self._payloads = np.zeros((slots, self.m, self.symbols), dtype=np.int64)
        self._written = np.zeros((slots, self.m), dtype=bool)
        self.erase_counts = [0] * len(self.block_ids)

        rng = np.random.default_rng(seed)
        self.originals = rng.integers(0, field.order, size=(self.size, self.symbols), dtype=np.int64)
        for i, j in spec.pages():
            d = spec.datum_index(i, j)
            self._coeffs[i, j - 1, d] = 1
            self._payloads[i, j - 1] = self.originals[d]
            self._written[i, j - 1] = True

        self._echelon: Optional[Echelon] = None

    def is_aux(self, block: int) -> bool:
        return block == 0 or (self.aux_blocks == 2 and block == self.n + 1)

    def _check_block(self, block: int) -> None:
        if block not in self.block_ids:
            raise DeviceViolation(f"Block {block} does not exist on this device")

    def _check_page(self, block: int, page: int) -> None:
        self._check_block(block)
        if not 1 <= page <= self.m:
            raise DeviceViolation(f"Page {page} out of range 1..{self.m}")

    def _basis(self) -> Echelon:
        # Writes never change the stored span (they are checked to lie inside
        # it), so the basis only needs rebuilding after an erase.
        if self._echelon is None:
            self._echelon = row_echelon(
                self.field,
                self._coeffs[self._written],
                self._payloads[self._written],
            )
        return self._echelon

    def erase(self, block: int) -> None:
        """Clear all m pages of block and count the erasure"""
        self._check_block(block)
        self._coeffs[block] = 0
        self._payloads[block] = 0
        self._written[block] = False
        self.erase_counts[self.block_ids.index(block)] += 1
        self._echelon = None

    def write(self, block: int, page: int, coeffs) -> None:
        """
        Program page with the combination coeffs of the original data.

        The payload is computed from stored payloads only, through an
        expressing combination found by elimination.
        """
        self._check_page(block, page)
        if self._written[block, page - 1]:
            raise WriteOnceViolation(f"Page p_{block},{page} is already written")
        vector = np.array(coeffs, dtype=np.int64)
        if vector.shape != (self.size,):
            raise DeviceViolation(f"Coefficient vector has length {vector.size}, expected {self.size}")
        if vector.size and (vector.min() < 0 or vector.max() >= self.field.order):
            raise DeviceViolation(f"Coefficients must be symbols of GF(2^{self.field.w})")

        residual, payload = reduce_vector(self.field, self._basis(), vector)
        if residual.any():
            raise ComputabilityViolation(
                f"Coefficients for p_{block},{page} are not computable from the stored pages"
            )
        self._coeffs[block, page - 1] = vector
        self._payloads[block, page - 1] = payload
        self._written[block, page - 1] = True

        if self.verify_payloads and not self.payload_consistent(block, page):
            raise DeviceViolation(f"Payload of p_{block},{page} disagrees with its coefficients")

    def stored_rank(self, coordinates: Optional[Iterable[int]] = None) -> int:
        """
        Rank of the stored coefficient vectors.

        With coordinates, only pages supported inside those datum coordinates
        count, restricted to them (one block-permutation set's share).
        """
        if coordinates is None:
            return self._basis().rank
        columns = sorted(set(coordinates))
        stored = self._coeffs[self._written]
        if stored.shape[0] == 0:
            return 0
        outside = np.ones(self.size, dtype=bool)
        outside[columns] = False
        inside_rows = ~stored[:, outside].any(axis=1)
        return row_echelon(self.field, stored[inside_rows][:, columns]).rank

    def check_recoverable(self) -> bool:
        """The stored coefficient vectors span all nm original pages"""
        return self.stored_rank() == self.size

    def page_state(self, block: int, page: int) -> PageState:
        self._check_page(block, page)
        if not self._written[block, page - 1]:
            return PageState()
        return PageState(
            coeffs=self._coeffs[block, page - 1].copy(),
            payload=self._payloads[block, page - 1].copy(),
        )

    def payload_bytes(self, block: int, page: int) -> Optional[bytes]:
        state = self.page_state(block, page)
        if state.empty:
            return None
        return state.payload.astype(self.field.dtype).tobytes()

    def support(self, block: int) -> List[Optional[Set[int]]]:
        """For each page: the 1-based datum coordinates with nonzero coefficient, None if empty"""
        contents: List[Optional[Set[int]]] = []
        for page in range(self.m):
            if not self._written[block, page]:
                contents.append(None)
            else:
                contents.append({int(d) + 1 for d in np.nonzero(self._coeffs[block, page])[0]})
        return contents

    def payload_consistent(self, block: int, page: int) -> bool:
        """Recompute the payload from the originals and compare symbol-wise"""
        if not self._written[block, page - 1]:
            return True
        expected = matmul(self.field, self._coeffs[block, page - 1][None, :], self.originals)[0]
        return bool(np.array_equal(expected, self._payloads[block, page - 1]))

    def final_placement(self) -> Tuple[bool, str]:
        """
        Every D_{i,j} sits verbatim at p_{alpha(i,j), beta(i,j)} and all
        auxiliary blocks are empty.
        """
        for block in self.block_ids:
            if self.is_aux(block) and self._written[block].any():
                return False, f"auxiliary block {block} is not erased"
        for i, j in self.spec.pages():
            a, b = self.spec.target(i, j)
            d = self.spec.datum_index(i, j)
            if not self._written[a, b - 1]:
                return False, f"p_{a},{b} is empty; expected D_{i},{j}"
            expected = np.zeros(self.size, dtype=np.int64)
            expected[d] = 1
            if not np.array_equal(self._coeffs[a, b - 1], expected):
                return False, f"p_{a},{b} does not hold D_{i},{j}"
            if not np.array_equal(self._payloads[a, b - 1], self.originals[d]):
                return False, f"payload at p_{a},{b} differs from D_{i},{j}"
        return True, "ok"
