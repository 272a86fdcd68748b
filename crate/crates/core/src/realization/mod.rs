//! Polynomial realizations over quasi-ordered alphabets.

pub mod algebra;
pub mod alphabet;
pub mod monomial;
pub mod oracle;

pub use algebra::{
    doubling, quotient_doubleprime, quotient_prime, realize, realize_element, realize_quasi_poset, realize_simple,
    AlgElement, AlgTensor, AlphabetAlgebra, Squaring,
};
pub use alphabet::Alphabet;
pub use monomial::{Letter, Monomial};
