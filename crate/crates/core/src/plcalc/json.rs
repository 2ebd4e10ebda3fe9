//! `[{"from":…,"to":…,"c0":…,"c1":…,"c2":…}, …]`, with every scalar in the
//! compact [`Scalar`] form.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Piece, PiecewisePoly};
use crate::exactfield::Scalar;

#[derive(Serialize, Deserialize)]
struct PieceRepr {
    from: Scalar,
    to: Scalar,
    c0: Scalar,
    c1: Scalar,
    c2: Scalar,
}

impl Serialize for PiecewisePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<PieceRepr> = self
            .pieces
            .iter()
            .map(|p| PieceRepr {
                from: Scalar(p.start.clone()),
                to: Scalar(p.end.clone()),
                c0: Scalar(p.coeffs[0].clone()),
                c1: Scalar(p.coeffs[1].clone()),
                c2: Scalar(p.coeffs[2].clone()),
            })
            .collect();
        reprs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiecewisePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let reprs = Vec::<PieceRepr>::deserialize(deserializer)?;
        let pieces = reprs
            .into_iter()
            .map(|r| Piece::new(r.from.0, r.to.0, [r.c0.0, r.c1.0, r.c2.0]))
            .collect();
        PiecewisePoly::new(pieces).map_err(D::Error::custom)
    }
}
