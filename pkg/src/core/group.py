"""Group specifications for ℍₙ×ℝᵏ"""

from dataclasses import dataclass

from src.utils.exceptions import ValidationError


@dataclass(frozen=True, order=True)
class GroupSpec:
    """
    The group ℍₙ×ℝᵏ.

    n is the Heisenberg index (0 for a purely Euclidean group) and k the
    dimension of the Euclidean factor.
    """

    n: int
    k: int = 0

    def __post_init__(self):
        for field_name in ('n', 'k'):
            value = getattr(self, field_name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError(f"{field_name} must be an integer", field=field_name)
            if value < 0:
                raise ValidationError(f"{field_name} must be non-negative, got {value}", field=field_name)
        if self.n + self.k < 1:
            raise ValidationError("n + k must be at least 1", details={'n': self.n, 'k': self.k})

    @property
    def Q(self) -> int:
        """Homogeneous dimension."""
        if self.n == 0:
            return self.k
        return 2 * self.n + 2 + self.k

    @property
    def heisenberg_dimension(self) -> int:
        """Homogeneous dimension of the ℍₙ factor alone (0 if n = 0)."""
        return 2 * self.n + 2 if self.n else 0

    @property
    def is_euclidean(self) -> bool:
        return self.n == 0

    def heisenberg_factor(self) -> 'GroupSpec':
        """The group ℍₙ with the Euclidean factor dropped."""
        if self.n == 0:
            raise ValidationError("Euclidean group has no Heisenberg factor", details={'k': self.k})
        return GroupSpec(self.n, 0)

    @property
    def label(self) -> str:
        if self.n == 0:
            return f"R{self.k}"
        if self.k == 0:
            return f"H{self.n}"
        return f"H{self.n}xR{self.k}"

    def __str__(self) -> str:
        return self.label


def homogeneous_dimension(g: GroupSpec) -> int:
    """Return Q(n, k)."""
    return g.Q
