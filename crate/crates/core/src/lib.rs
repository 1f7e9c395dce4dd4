//! Exact arithmetic for monomial ideals in two variables and their monomial
//! reductions.
//!
//! An ideal `I ⊂ K[x, y]` containing `x^a` and `y^b` has `J = (x^a, y^b)` as
//! its minimal monomial reduction exactly when every generator `x^c y^d`
//! satisfies `bc + ad >= ab`. The crate computes reduction numbers
//! `r(I) = min { k : I^(k+1) = J I^k }`, the smallest reduction-number-one
//! ideal containing `I`, the behaviour of `r(I^k)`, and enumeration tables
//! over families of such ideals.
//!
//! ```
//! use monored::{parse_ideal, reduction_number, FramedIdeal};
//!
//! let i = parse_ideal("x^4 + y^8 + x^3*y^3").unwrap();
//! let f = FramedIdeal::new(i).unwrap();
//! assert_eq!(reduction_number(&f, 64).unwrap().r, 2);
//! ```

pub mod bitset;
pub mod closure;
pub mod equigen;
pub mod error;
pub mod monomial;
pub mod parse;
pub mod powers;
pub mod reduction;
pub mod survey;

pub use closure::{
    closure, closure_3gen, closure_capped, minimal_one_oracle, violations, ClosureTrace, Step,
    Violation,
};
pub use equigen::{
    k_fold, masiproves_formula, power_set, r_equigen, r_equigen_capped, redone_characterize,
    somayeh_family, sumset, sunshine_classify, ExponentSet,
};
pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal};
pub use parse::{parse_ideal, parse_monomial};
pub use powers::{
    limit_value, masoomeh_family, monotonicity_probe, power_bound, power_profile, related_check,
    PowerProfile, RelatedReport,
};
pub use reduction::{
    classify, default_cap, equigenerated_part, minimal_monomial_reduction, nu, onion_ideal,
    reduction_number, strict_part, three_gen_reduction_number, Bounds, Classification, FramedIdeal,
    NuValue, ReductionReport,
};
pub use survey::{
    m_table, n_table, ourlimits_check, r_set, specialnight_check, totient, OurLimits, SpecialNight,
    SurveyRow, SurveyTable,
};
