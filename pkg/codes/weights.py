from collections import Counter


class WeightDistribution:
    """
    A weight -> frequency multiset for a code, zero codeword included.

    Equality is exact on integer weights and frequencies.
    """

    def __init__(self, pairs=None):
        counts = Counter()
        for weight, freq in dict(pairs or {}).items():
            if freq:
                counts[int(weight)] += int(freq)
        self.pairs = dict(sorted(counts.items()))

    @classmethod
    def merge(cls, parts):
        """Associative merge of partial distributions (order does not matter)."""
        total = Counter()
        for part in parts:
            total.update(part.pairs if isinstance(part, WeightDistribution) else part)
        return cls(total)

    @property
    def total(self):
        return sum(self.pairs.values())

    @property
    def nonzero_weights(self):
        return [w for w in self.pairs if w != 0]

    @property
    def min_nonzero(self):
        weights = self.nonzero_weights
        return min(weights) if weights else None

    @property
    def max_weight(self):
        weights = self.nonzero_weights
        return max(weights) if weights else None

    def to_list(self):
        """[[w, f], ...] in increasing weight order."""
        return [[w, f] for w, f in self.pairs.items()]

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.pairs == other.pairs

    def __repr__(self):
        return f"WeightDistribution({self.pairs})"
