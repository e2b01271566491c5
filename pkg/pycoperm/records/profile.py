#
#  This file is part of Python Coherent Permutations (PyCoPerm)
#
#  Copyright (C) 2021 Universitat Jaume I
#
#  PyCoPerm is free software: you can redistribute it and/or modify it under the
#  terms of the GNU General Public License as published by the Free Software
#  Foundation, either version 3 of the License, or (at your option) any later
#  version.
#
#  This program is distributed in the hope that it will be useful, but WITHOUT
#  ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
#  or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public
#  License for more details.
#
#  You should have received a copy of the GNU General Public License along
#  with this program.  If not, see <https://www.gnu.org/licenses/>.
#

"""
Record profiles, centered compositions and ordered partitions

A record profile stores the record values r_{-l} < ... < r_0 < ... < r_u of a
permutation, the center r_0 being its first entry. A centered composition
stores the same information differenced: lambda_0 = 1, lambda_k = r_k - r_{k-1}
for k > 0 and lambda_k = r_{k+1} - r_k for k < 0.
"""

from bisect import bisect_left, bisect_right

from ..errors import ValidationError, InvalidEncodingError


class RecordProfile:
    """
    Two sided record values, with optional record times.

    Parameters
    ----------
    values : sequence of int
        The increasing sequence (r_{-l}, ..., r_0, ..., r_u).
    lower_count : int
        Number l of proper lower records, i.e. the index of the center in values.
    times : dict, optional
        Mapping k -> t_k with the record positions.
    """

    __slots__ = ("_values", "_lower_count", "_times")

    def __init__(self, values, lower_count, times=None):
        self._values = tuple(int(v) for v in values)
        self._lower_count = int(lower_count)
        self._times = dict(times) if times is not None else None
        self._validate()

    def _validate(self):
        values, l = self._values, self._lower_count
        if len(values) == 0 or not 0 <= l < len(values):
            raise ValidationError(f"Center index {l} is not valid for record values {values}.")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ValidationError(f"Record values {values} are not strictly increasing.")
        n = values[-1]
        if values[0] != 1:
            raise ValidationError(f"The lowest record value must be 1, not {values[0]}.")
        if not min(2, n) <= len(values) <= n:
            raise ValidationError(f"{len(values)} record values are not possible for n={n}.")
        if self._times is not None:
            if set(self._times) != set(range(-l, self.upper_count + 1)):
                raise ValidationError(f"Record times {self._times} do not match the record values.")
            if self._times[0] != 1 or len(set(self._times.values())) != len(self._times):
                raise ValidationError(f"Record times {self._times} must start at 1 and be distinct.")
            for side in (1, -1):
                count = self.upper_count if side == 1 else l
                ts = [self._times[side * k] for k in range(count + 1)]
                if any(a >= b for a, b in zip(ts, ts[1:])) or ts[-1] > n:
                    raise ValidationError(f"Record times {self._times} are not increasing on each side.")

    @classmethod
    def parse(cls, text):
        """Parses the '1,2,[3],7,8' syntax, brackets marking the center."""
        items = str(text).replace(" ", "").split(",")
        centers = [k for k, item in enumerate(items) if item.startswith("[") and item.endswith("]")]
        if len(centers) != 1:
            raise InvalidEncodingError(f"Record profile '{text}' must have exactly one bracketed center.")
        try:
            values = [int(item.strip("[]")) for item in items]
        except ValueError:
            raise InvalidEncodingError(f"Could not parse record profile '{text}'.")
        return cls(values, centers[0])

    @property
    def values(self):
        return self._values

    @property
    def lower_count(self):
        return self._lower_count

    @property
    def upper_count(self):
        return len(self._values) - self._lower_count - 1

    @property
    def n(self):
        return self._values[-1]

    @property
    def center(self):
        return self._values[self._lower_count]

    @property
    def times(self):
        return self._times

    def value(self, k):
        """Record value r_k for -l <= k <= u."""
        return self._values[self._lower_count + k]

    def time(self, k):
        return self._times[k]

    @property
    def record_times(self):
        """Record times ordered as the record values."""
        if self._times is None:
            return None
        return [self._times[k] for k in range(-self._lower_count, self.upper_count + 1)]

    def composition(self):
        return profile_composition(self)

    def same_values(self, other):
        return self._values == other.values and self._lower_count == other.lower_count

    def __eq__(self, other):
        return isinstance(other, RecordProfile) and self.same_values(other) and self._times == other.times

    def __hash__(self):
        return hash((self._values, self._lower_count))

    def __str__(self):
        return ",".join(f"[{v}]" if k == self._lower_count else str(v) for k, v in enumerate(self._values))

    def __repr__(self):
        return f"RecordProfile({str(self)})"


class CenteredComposition:
    """
    Positive parts (lambda_{-l}, ..., lambda_0 = 1, ..., lambda_u) of n = sum(parts).

    Vertices of the poset whose saturated chains count coherent extensions.
    """

    __slots__ = ("_parts", "_lower_count")

    def __init__(self, parts, lower_count):
        self._parts = tuple(int(x) for x in parts)
        self._lower_count = int(lower_count)
        if not 0 <= self._lower_count < len(self._parts):
            raise ValidationError(f"Center index {lower_count} is not valid for parts {self._parts}.")
        if self._parts[self._lower_count] != 1:
            raise ValidationError(f"The center part must be 1, not {self._parts[self._lower_count]}.")
        if any(x < 1 for x in self._parts):
            raise ValidationError(f"All the parts of {self._parts} must be positive.")

    @classmethod
    def parse(cls, text):
        """Parses the '3,1,^1,3,2' syntax, the caret marking the center."""
        items = str(text).replace(" ", "").split(",")
        centers = [k for k, item in enumerate(items) if item.startswith("^")]
        if len(centers) != 1:
            raise InvalidEncodingError(f"Composition '{text}' must have exactly one center marked with '^'.")
        try:
            parts = [int(item.lstrip("^")) for item in items]
        except ValueError:
            raise InvalidEncodingError(f"Could not parse composition '{text}'.")
        return cls(parts, centers[0])

    @property
    def parts(self):
        return self._parts

    @property
    def lower_count(self):
        return self._lower_count

    @property
    def upper_count(self):
        return len(self._parts) - self._lower_count - 1

    @property
    def degree(self):
        return sum(self._parts)

    n = degree

    def part(self, k):
        """lambda_k for -l <= k <= u."""
        return self._parts[self._lower_count + k]

    def indices(self):
        return range(-self._lower_count, self.upper_count + 1)

    def noncentral(self):
        """Yields (k, lambda_k) for every k != 0."""
        for k in self.indices():
            if k != 0:
                yield k, self.part(k)

    def tail_sum(self, k):
        """Lambda_k: sum of the parts from k outwards (k != 0)."""
        if k > 0:
            return sum(self._parts[self._lower_count + k:])
        if k < 0:
            return sum(self._parts[:self._lower_count + k + 1])
        raise ValueError("Tail sums are not defined for the center.")

    def profile(self):
        return profile_composition(self)

    def record_values(self):
        values = []
        cumulative = 0
        for k, part in enumerate(self._parts):
            if k <= self._lower_count:
                values.append(cumulative + 1)
            cumulative += part
            if k > self._lower_count:
                values.append(cumulative)
        return values

    def slot_block(self, i, values=None):
        """
        Block that receives a new entry of initial rank i, 2 <= i <= n, the new
        entry lying between the old values i-1 and i.
        """
        values = self.record_values() if values is None else values
        l = self._lower_count
        if i <= values[l]:
            return bisect_left(values, i) - 1 - l
        return bisect_left(values, i) - l

    def block_slots(self, k, values=None):
        """Initial ranks of the next entry that fall into block k != 0."""
        values = self.record_values() if values is None else values
        l = self._lower_count
        if k > 0:
            return range(values[l + k - 1] + 1, values[l + k] + 1)
        return range(values[l + k] + 1, values[l + k + 1] + 1)

    def follower_for_rank(self, i):
        """Composition of degree n+1 reached when the next entry has initial rank i."""
        n = self.degree
        parts = list(self._parts)
        if i == 1:
            return CenteredComposition([1] + parts, self._lower_count + 1)
        if i == n + 1:
            return CenteredComposition(parts + [1], self._lower_count)
        parts[self._lower_count + self.slot_block(i)] += 1
        return CenteredComposition(parts, self._lower_count)

    def __eq__(self, other):
        return (isinstance(other, CenteredComposition) and self._parts == other.parts
                and self._lower_count == other.lower_count)

    def __hash__(self):
        return hash((self._parts, self._lower_count))

    def __str__(self):
        return ",".join(f"^{x}" if k == self._lower_count else str(x) for k, x in enumerate(self._parts))

    def __repr__(self):
        return f"CenteredComposition({str(self)})"


class OrderedPartition:
    """Blocks A_k of the positions [n], indexed by k, with A_0 = {1}."""

    def __init__(self, blocks, n):
        self.blocks = {k: frozenset(b) for k, b in blocks.items()}
        self.n = n
        union = set()
        for k, block in self.blocks.items():
            if len(block) == 0 or union & block:
                raise ValidationError(f"Block A_{k} is empty or overlaps another block.")
            union |= block
        if union != set(range(1, n + 1)) or self.blocks.get(0) != frozenset({1}):
            raise ValidationError("Blocks must partition [n] and have A_0 = {1}.")

    def sizes(self):
        """Block sizes ordered by block index."""
        return [len(self.blocks[k]) for k in sorted(self.blocks)]

    def minima(self):
        return {k: min(block) for k, block in self.blocks.items()}

    def __repr__(self):
        inner = ", ".join(f"A_{k}={sorted(self.blocks[k])}" for k in sorted(self.blocks))
        return f"OrderedPartition({inner})"


def extract_records(p):
    """Scans a permutation left to right and returns its record profile with times."""
    center = p[0]
    lower, upper = [], []
    times = {0: 1}
    low = high = center
    for position, v in enumerate(p, start=1):
        if v < low:
            low = v
            lower.append(v)
            times[-len(lower)] = position
        elif v > high:
            high = v
            upper.append(v)
            times[len(upper)] = position
    return RecordProfile(list(reversed(lower)) + [center] + upper, len(lower), times)


def profile_composition(x):
    """Converts a record profile into its centered composition, and conversely."""
    if isinstance(x, RecordProfile):
        values, l = x.values, x.lower_count
        parts = [values[k + 1] - values[k] for k in range(l)] + [1] + \
                [values[k] - values[k - 1] for k in range(l + 1, len(values))]
        return CenteredComposition(parts, l)
    if isinstance(x, CenteredComposition):
        return RecordProfile(x.record_values(), x.lower_count)
    raise ValidationError(f"Cannot convert '{x}' to a record profile or a centered composition.")


def block_index(profile, v):
    """Index k of the block whose value range contains v."""
    values, l = profile.values, profile.lower_count
    center = values[l]
    if v == center:
        return 0
    if v < center:
        # r_k <= v < r_{k+1}
        return bisect_right(values, v) - 1 - l
    # r_{k-1} < v <= r_k
    return bisect_right(values, v - 1) - l


def ordered_blocks(p):
    """Groups the positions of p into the blocks A_k of its record profile."""
    profile = extract_records(p)
    blocks = {}
    for position, v in enumerate(p, start=1):
        blocks.setdefault(block_index(profile, v), set()).add(position)
    return OrderedPartition(blocks, p.n)
