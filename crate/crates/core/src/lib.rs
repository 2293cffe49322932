//! Exact arithmetic in the group rings `F_d[P]` of the Promislow group, with
//! constructors and verifiers for its known non-trivial units and
//! meet-in-the-middle searches for new ones.
//!
//! ```
//! use kaplansky_core::{gardam_unit, verify_unit};
//!
//! let u = gardam_unit();
//! assert!(verify_unit(&u).is_verified());
//! ```

pub mod error;
pub mod field;
pub mod groupring;
pub mod laurent;
pub mod search;
pub mod units;

pub use error::{AlgebraError, SearchError};
pub use field::{fp_normalize, Coeff, PrimeChar};
pub use groupring::{
    check_reduced, check_xy_symmetry, gardam_adjoint, is_trivial, mul_oracle, reduced_pair_keys,
    reduced_pair_keys_qr, verify_unit, ElementWire, GroupRingElem, UnitStatus, UnitVerdict,
};
pub use laurent::{ExpVec, Laurent, VarSet};
pub use search::{
    ansatz_search, canonical_element, canonicalize, enumerate_symmetric, estimate_candidates,
    read_result_hits, search, search_units, ExpRange, Role, SearchBox, SearchConfig, SearchHit,
    SearchReport, Strategy, DEFAULT_MAX_CANDIDATES,
};
pub use units::{
    assemble_from_f, char3_unit, check_f_system, check_reduction_chain, family_f_table,
    family_unit, gardam_unit, ps_variant, qr_variant, variant_table, Builtin, Char3Variant, FTable,
    FamilyParams, IdentityCheck, IdentityReport, PS_VARIANTS, QR_VARIANTS,
};
