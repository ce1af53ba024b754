"""Sanskrit meter identification for Varnavrtta verse.

Scansion (varna split, syllables, laghu/guru weights, ganas), a meter
database with exact and positional lookup, edit-distance fuzzy matching
with per-syllable correction hints, and line/verse identification with
corpus statistics.
"""

__version__ = "0.1.0"

from .matcher import (  # noqa: F401
    EditOp,
    Match,
    Suggestion,
    find_direct_match,
    find_fuzzy_match,
    find_pattern_match,
    render_suggestion,
    similarity,
    transform,
    transform_cost,
)
from .meterdb import (  # noqa: F401
    MeterDef,
    MetricalDatabase,
    PadaPattern,
    load,
    load_path,
)
from .pipeline import (  # noqa: F401
    collect_stats,
    export,
    identify_document,
    identify_line,
    identify_verse,
    split_document,
)
from .prosody import (  # noqa: F401
    GanaSignature,
    LgSignature,
    Syllable,
    Varna,
    from_gana,
    matra_count,
    scan_line,
    split_varnas,
    syllabify,
    to_gana,
    weigh,
)
from .translit import (  # noqa: F401
    NormalizedText,
    Scheme,
    detect_scheme,
    from_devanagari,
    to_devanagari,
)
