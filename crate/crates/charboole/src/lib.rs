//! Character analogues of Boole summation and the machinery around them:
//! exact Bernoulli/Euler polynomials and their periodic and character-twisted
//! variants, Dirichlet characters with exact root-of-unity values, three
//! summation engines (classical Boole, character Euler-MacLaurin, character
//! Boole), the alternating Dirichlet L-function l(s,a,chi) by several routes,
//! the character gamma and digamma analogues, and Hardy-Berndt sums with
//! exactly checkable reciprocity laws.
//!
//! Exact identities are verified in arbitrary-precision rational arithmetic
//! whenever the character is real; complex characters are evaluated through a
//! floating-point embedding of their root-of-unity values.

pub mod characters;
pub mod error;
pub mod eulerfun;
pub mod hbsums;
pub mod lfunc;
pub mod numeric;
pub mod suites;
pub mod summation;
pub mod value;

pub use characters::{enumerate_characters, CharacterValue, DirichletCharacter};
pub use error::{Error, Result};
pub use eulerfun::{char_periodic_eval, periodic_eval, poly_coeffs, CharPeriodicSpec, Kind, PolySpec};
pub use numeric::{hurwitz_zeta, integrate_piecewise, log_gamma, polygamma, QuadratureSpec};
pub use summation::{boole_sum, char_boole_sum, char_euler_maclaurin, SmoothFunction, SummationReport};
pub use value::Value;
