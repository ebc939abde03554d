//! Three-valued logic over valuations into `{T, B, F}`.
//!
//! Predicates are built from atoms (points), bound variables ranging over
//! points, the connectives of the truth tables below, the modalities `K`
//! and `E` that quantify over all valuations, and their witness-relative
//! forms that quantify over continuous valuations only.

mod characterise;
mod eval;
mod parse;
mod pred;
mod sequent;
mod theory;

pub use characterise::{
    intertwined_w, quasi_regular_w, regular_prime_w, regular_w, top_indis_w, unconflicted_w,
    weakly_regular_w, Characterisation,
};
pub use eval::{eval, valid, valid_continuous, valid_extremal, Model, DEFAULT_VALUATION_BOUND};
pub use parse::parse;
pub use pred::{BinOp, Modality, Pred, UnOp};
pub use sequent::{Tag, TagSequent};
pub use theory::{ax_value, open_ax, theory_ax};

use crate::three::Three;

pub fn neg(a: Three) -> Three {
    match a {
        Three::T => Three::F,
        Three::B => Three::B,
        Three::F => Three::T,
    }
}

/// `T` exactly when the argument is `T`.
pub fn box_t(a: Three) -> Three {
    if a == Three::T {
        Three::T
    } else {
        Three::F
    }
}

/// `T` exactly when the argument is designated.
pub fn box_tb(a: Three) -> Three {
    if a.designated() {
        Three::T
    } else {
        Three::F
    }
}

/// `T` exactly when the argument is `B`.
pub fn box_b(a: Three) -> Three {
    if a == Three::B {
        Three::T
    } else {
        Three::F
    }
}

pub fn and(a: Three, b: Three) -> Three {
    a.min(b)
}

pub fn or(a: Three, b: Three) -> Three {
    a.max(b)
}

/// Material implication `¬a ∨ b`.
pub fn mat_imp(a: Three, b: Three) -> Three {
    or(neg(a), b)
}

pub fn mat_iff(a: Three, b: Three) -> Three {
    and(mat_imp(a, b), mat_imp(b, a))
}

/// Implication that returns `b` whenever `a` is designated.
pub fn imp(a: Three, b: Three) -> Three {
    if a.designated() {
        b
    } else {
        Three::T
    }
}

pub fn iff(a: Three, b: Three) -> Three {
    and(imp(a, b), imp(b, a))
}
