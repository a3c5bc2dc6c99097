"""Ideal calculus over Zariski spectra of finite commutative rings."""

try:
    from hyspec._hyspec import (  # installed package layout
        HyspecError,
        Ring,
        default_corpus,
        registry_ids,
        verify,
    )
except ImportError:  # in-tree builds put _hyspec on sys.path directly
    from _hyspec import (
        HyspecError,
        Ring,
        default_corpus,
        registry_ids,
        verify,
    )

__all__ = [
    "HyspecError",
    "Ring",
    "default_corpus",
    "registry_ids",
    "verify",
]
