from typing import TYPE_CHECKING

from pyrandgroups.errors import InvalidWordError

if TYPE_CHECKING:
    from .presentation import Presentation


class PresentationChecker:
    """A class for checking the validity of the relators of a presentation."""

    def __init__(self, presentation: "Presentation"):
        self.presentation = presentation

    def check_alphabet(self):
        alphabet = self.presentation.alphabet
        for index, relator in enumerate(self.presentation.relators):
            if not relator.uses_alphabet(alphabet):
                raise InvalidWordError(
                    f"Relator {index} ({relator}) uses letters outside the alphabet with n={alphabet.n}."
                )

    def check_sampled(self):
        """Sampled presentations hold reduced relators of one recorded length."""
        config = self.presentation.provenance
        if config is None:
            return
        for index, relator in enumerate(self.presentation.relators):
            if len(relator) != config.L or not relator.is_reduced():
                raise InvalidWordError(
                    f"Relator {index} ({relator}) is not a reduced word of length {config.L}."
                )

    def check_common_length(self) -> int:
        """Return the common relator length, raising if relators differ in length."""
        lengths = {len(relator) for relator in self.presentation.relators}
        if len(lengths) != 1:
            raise InvalidWordError(
                f"Relators must share one length, found lengths {sorted(lengths)}."
            )
        return lengths.pop()

    def check_reduced(self):
        for index, relator in enumerate(self.presentation.relators):
            if not relator.is_reduced():
                raise InvalidWordError(f"Relator {index} ({relator}) is not reduced.")
