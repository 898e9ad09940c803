"""Type C_n crystal combinatorics: words, symplectic keys, galleries, the
symplectic plactic monoid, and wall-crossing dimension counts."""

from .rootdata import (
    AffineRoot,
    Coweight,
    RootSystem,
    coroot,
    fundamental_coweight,
    is_dominant,
    mv_dimension,
    pairing,
    reflect,
    root_system,
    simple_root,
)
from .words import (
    Signature,
    Word,
    e_word,
    epsilon_word,
    f_word,
    format_word,
    is_dominant_word,
    parse_word,
    phi_word,
    raise_word,
    signature,
    weight_of_word,
    words_equivalent,
)
from .keys import (
    Block,
    ReadableKey,
    EMPTY_KEY,
    compute_T,
    coweight_of_shape,
    highest_ls_key,
    is_admissible_word,
    is_ls_block,
    is_readable_key,
    n_statistic,
    pair_block,
    render_key,
    shape_of_key,
    single_block,
    word_of_key,
    zero_block,
)
from .galleries import (
    Gallery,
    e_gallery,
    e_key,
    f_gallery,
    f_key,
    galleries_equivalent,
    gallery_of_key,
    gallery_of_word,
    is_dominant_gallery,
    is_ls_key,
    key_of_gallery,
    m_min,
    raise_gallery,
    raise_key,
    weight_of_gallery,
)
from .plactic import (
    RelationInstance,
    apply_site,
    canonical_ls_key,
    plactic_closure,
    plactic_equivalent,
    rewrite_sites,
)
from .cells import cell_dimension, crossing_data, load_bearing_roots
from .explorer import (
    CrystalGraph,
    count_dominant_words,
    enumerate_readable_keys,
    fiber,
    generate_component,
    weight_multiplicities,
)

__all__ = [name for name in dir() if not name.startswith("_")]
