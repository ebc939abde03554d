use crate::pointset::PointSet;
use crate::space::Semitopology;
use crate::three::{Three, Valuation3};

/// The valuation that is `T` on `o`, `F` on the interior of its complement and `B` elsewhere.
pub fn extremal_valuation_of(s: &Semitopology, o: PointSet) -> Valuation3 {
    let out = s.interior(s.universe() - o);
    Valuation3::from_sets(s.len(), o, out)
}

/// Extremal valuations, one per regular open, in canonical order of the `T`-side.
pub fn extremal_valuations(s: &Semitopology) -> Vec<Valuation3> {
    s.regular_opens()
        .into_iter()
        .map(|o| extremal_valuation_of(s, o))
        .collect()
}

/// Continuous, with designated sets equal to the closures of the definite parts.
pub fn is_extremal(s: &Semitopology, f: &Valuation3) -> bool {
    s.is_continuous_valuation(f)
        && s.closure(f.preimage(&[Three::T])) == f.designated()
        && s.closure(f.preimage(&[Three::F])) == f.neg_designated()
}
