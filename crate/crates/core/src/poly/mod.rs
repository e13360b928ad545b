//! Exact polynomial arithmetic over prime fields and the rationals.

pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod idealfile;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod pfaffian;
pub mod polynomial;
pub mod ring;

pub use field::{Field, FieldError, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{buchberger, is_groebner_basis, is_reduced_groebner_basis, normal_form, GroebnerError};
pub use hilbert::{codim_and_multiplicity, HilbertError};
pub use idealfile::{format_ideal_file, ideal_json, parse_ideal_file, IdealFile, IdealFileError, IdealJson};
pub use ideal::{
    colon_by_poly, colon_ideal, contains, ideal_member, ideals_equal, intersect, is_regular_sequence,
    minimalize_generators, Ideal, IdealError,
};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_poly, ParseError};
pub use pfaffian::{maximal_pfaffians, pfaffian, PfaffianError, SkewMatrix};
pub use polynomial::Polynomial;
pub use ring::{Budget, PolyRing, RingError};
