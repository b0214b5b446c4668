//! Exact certification of real-rootedness, interleaving and compatibility.

mod certificate;
mod chains;
mod interleave;
mod realrooted;
mod roots;

pub use certificate::{Certificate, ChainLink, Checkpoint, Claim, Evidence, Region, RootRecord, Verdict, WeightSample};
pub use chains::{
    compatibility_suite, derivative_interleaving_suite, type_d_real_rooted_suite, verify_zero_chains, SuiteItem,
};
pub use interleave::{check_compatibility, check_interleaving, common_interleaver_exists, DEFAULT_SAMPLES, DEFAULT_SEED};
pub use realrooted::certify_real_rooted;
pub use roots::{
    compare_roots, isolate_roots, nf_at, rational_root, real_root_count, sturm_count, IsolatingInterval, RootList,
};
