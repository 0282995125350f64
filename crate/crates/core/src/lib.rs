//! Exact computer algebra for local multiplicity theory.
//!
//! The crate computes, over exact rational arithmetic:
//!
//! - canonical reduced Gröbner bases (Buchberger with the normal selection
//!   strategy) and colengths of zero-dimensional ideals ([`groebner`]);
//! - Hilbert–Samuel value tables, the stabilized polynomial in binomial form,
//!   its coefficients `e_0, ..., e_d`, and the Poincaré-series numerator
//!   ([`hilbert`]);
//! - resolutions of plane curve singularities by iterated blow-ups, the
//!   δ-invariant by two independent routes, and the Hironaka criterion
//!   `e_1 = δ` ([`curves`]);
//! - verification reports for the coefficient inequalities and the
//!   power-invariance of the last coefficient ([`verify`]).
//!
//! Everything is deterministic: canonical polynomial forms, canonical bases,
//! no floating point anywhere.

pub mod coeff;
pub mod curves;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod verify;

pub use coeff::{Coefficient, FieldKind};
pub use curves::{
    blow_up_origin, delta, e1_of_ideal, is_hironaka, resolve, BlowUpRecord, ChartLabel,
    DeltaReport, HironakaReport, PlaneCurve, ResolutionNode,
};
pub use error::Error;
pub use groebner::{
    buchberger, colength, ideal_groebner, is_m_primary, normal_form, supported_only_at_origin,
    Colength, GroebnerBasis, StandardMonomialSet,
};
pub use hilbert::{
    e_coefficients, ev91_e_from_a, fit_hilbert_polynomial, hs_values, numerator_vector,
    HilbertSamuelData, PowerChain,
};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::RingContext;
pub use verify::{
    check_hhc, check_power_invariance, check_power_polynomial_growth, check_s5_chain,
    lattice_colength_oracle, run_paper_suite, HHCReport, PowerReport, S5ChainReport, SuiteReport,
};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
