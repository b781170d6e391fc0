//! Exact polynomial arithmetic over the integers and the identities around
//! `f_p(x) = (1+x)^p - x^p - 1`.

mod binomial;
mod modp;
mod poly;

pub use binomial::{
    build_f_p, build_h_p, check_k3_criterion, extract_g_p, find_root_primes, phi3,
    phi3_multiplicity, repeated_roots_mod_p, FactorizationRecord, K3Witness, ROOT_PRIMES_BELOW_500,
};
pub use modp::{gcd_mod, roots_mod_p};
pub use poly::{is_separable_over_q, rational_roots, IntPoly};
