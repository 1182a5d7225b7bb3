"""Exception hierarchy for pdsum."""


class PdError(Exception):
    """Base class for every error raised by pdsum"""


class ConfigError(PdError, ValueError):
    """A setting from the environment or .env file is malformed"""


class SeriesError(PdError, ValueError):
    """Invalid series operation (order mismatch, non-unit inversion, bad dissection)"""


class EtaSpecError(PdError, ValueError):
    """Invalid eta-quotient factor or unparsable text form"""


class PartitionError(PdError, ValueError):
    """Invalid partition, designation, or text form"""


class BijectionError(PdError, ValueError):
    """Input lies outside the domain of a bijection"""


class LatticeBoundError(PdError):
    """A lattice point inside the enumeration box but on its boundary shell fell within the order"""


class UnknownIdentityError(PdError, KeyError):
    """Requested identity is not in the registry"""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown identity: {self.name!r}"


class EnumerationCapError(PdError, ValueError):
    """Requested weight exceeds the configured enumeration cap"""

    def __init__(self, weight: int, cap: int):
        super().__init__(weight, cap)
        self.weight = weight
        self.cap = cap

    def __str__(self) -> str:
        return (f"refusing to enumerate weight {self.weight}: above the cap of {self.cap} "
                f"(raise it with --cap or PD_ENUM_CAP)")
