//! Exact commutative algebra over the bigraded polynomial ring
//! B = k[x1..xn, T1..Tn]: multivariate arithmetic, Groebner bases, ideal
//! operations (colon, saturation, Hilbert series, depth probes), and the
//! downgraded-sequence construction of the defining ideal of the Rees
//! algebra of the maximal ideal of a hypersurface ring, together with an
//! independent saturation oracle and a classification report.

pub mod depth;
pub mod error;
pub mod exec;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal_ops;
pub mod monomial;
pub mod oracle;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod rng;

pub use error::{Error, Result};
pub use field::{Coeff, Field, DEFAULT_PRIME};
pub use groebner::{GroebnerBasis, Ideal, DEFAULT_STEP_BUDGET};
pub use monomial::{Monomial, Ring, MAX_VARS};
pub use order::TermOrder;
pub use parse::parse_polynomial;
pub use poly::{Bidegree, Polynomial};
