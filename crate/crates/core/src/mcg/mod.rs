//! Topological equivalence of actions: braid and genus-one mapping-class
//! moves on generating vectors, combined with `Aut(G)`.

mod cache;
mod orbits;

pub use cache::{OrbitRecord, StratumCache, StratumRecord};
pub use orbits::{are_equivalent, orbits, OrbitOptions, OrbitSummary, Partition, StratumReport};

use crate::error::{Error, Result};
use crate::genvec::GeneratingVector;
use crate::group::{automorphism_generators, Automorphism, Elem, Group};

/// Bumped whenever the generating set of moves changes; cached strata carry it.
pub const MOVE_SET_VERSION: &str = "braid+A1A2C1C2+aut/1";

/// Move indices are 1-based, as in the usual presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `(x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}^-1 x_i x_{i+1})`
    Braid(usize),
    /// Inverse of `Braid(i)`.
    BraidInv(usize),
    /// `b_1 -> b_1 a_1^n`
    A1(i64),
    /// `a_1 -> a_1 b_1^n`
    A2(i64),
    /// `a_1 -> u a_1`, `x_i -> v x_i v^-1` with `u = b_1^-1 w z`, `v = z b_1^-1 w`
    C1(usize),
    /// `b_1 -> u b_1`, `x_i -> v x_i v^-1` with `u = w z a_1`, `v = z a_1 w`
    C2(usize),
    Aut(Automorphism),
}

impl Move {
    /// Checks that the move applies to vectors with orbit genus `h` and `l`
    /// elliptic entries.
    pub fn validate(&self, h: usize, l: usize) -> Result<()> {
        let ok = match *self {
            Move::Braid(i) | Move::BraidInv(i) => i >= 1 && i < l,
            Move::A1(_) | Move::A2(_) => h == 1,
            Move::C1(i) | Move::C2(i) => h == 1 && i >= 1 && i <= l,
            Move::Aut(_) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "{self:?} does not apply with h = {h}, l = {l}"
            )))
        }
    }
}

/// Applies `mv` to the flat entries `src`, writing into `dst`. The move must
/// already be validated for this shape.
pub(crate) fn apply_raw(group: &Group, h: usize, src: &[Elem], mv: &Move, dst: &mut [Elem]) {
    dst.copy_from_slice(src);
    let x = |i: usize| 2 * h + i - 1;
    match mv {
        Move::Braid(i) => {
            let (p, q) = (src[x(*i)], src[x(*i) + 1]);
            dst[x(*i)] = q;
            dst[x(*i) + 1] = group.product([group.inv(q), p, q]);
        }
        Move::BraidInv(i) => {
            let (p, q) = (src[x(*i)], src[x(*i) + 1]);
            dst[x(*i)] = group.product([p, q, group.inv(p)]);
            dst[x(*i) + 1] = p;
        }
        Move::A1(n) => dst[1] = group.mul(src[1], group.pow(src[0], *n)),
        Move::A2(n) => dst[0] = group.mul(src[0], group.pow(src[1], *n)),
        Move::C1(i) | Move::C2(i) => {
            let (a, b) = (src[0], src[1]);
            let ell = &src[2 * h..];
            let w = group.product(ell[..i - 1].iter().copied());
            let z = group.product(ell[*i..].iter().copied());
            let (u, v) = if matches!(mv, Move::C1(_)) {
                let binv = group.inv(b);
                (group.product([binv, w, z]), group.product([z, binv, w]))
            } else {
                (group.product([w, z, a]), group.product([z, a, w]))
            };
            if matches!(mv, Move::C1(_)) {
                dst[0] = group.mul(u, a);
            } else {
                dst[1] = group.mul(u, b);
            }
            dst[x(*i)] = group.conjugate(src[x(*i)], v);
        }
        Move::Aut(w) => {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = w.apply(s);
            }
        }
    }
}

pub fn apply_move(group: &Group, vec: &GeneratingVector, mv: &Move) -> Result<GeneratingVector> {
    let h = vec.orbit_genus();
    mv.validate(h, vec.elliptic().len())?;
    if let Move::Aut(w) = mv {
        check_aut(group, w)?;
    }
    let mut out = vec![0; vec.entries().len()];
    apply_raw(group, h, vec.entries(), mv, &mut out);
    Ok(GeneratingVector::from_flat(h, out))
}

/// Entrywise image under an automorphism.
pub fn apply_aut(
    group: &Group,
    vec: &GeneratingVector,
    aut: &Automorphism,
) -> Result<GeneratingVector> {
    apply_move(group, vec, &Move::Aut(aut.clone()))
}

fn check_aut(group: &Group, aut: &Automorphism) -> Result<()> {
    if aut.map().len() != group.order() {
        return Err(Error::GroupMismatch(format!(
            "automorphism acts on {} elements, {group} has {}",
            aut.map().len(),
            group.order()
        )));
    }
    Ok(())
}

/// Generators of the equivalence used for orbit computations, plus whether
/// the set is the full generating set for this orbit genus.
pub fn orbit_moves(group: &Group, h: usize, l: usize) -> Result<(Vec<Move>, bool)> {
    let mut moves: Vec<Move> = (1..l).map(Move::Braid).collect();
    if h == 1 {
        moves.push(Move::A1(1));
        moves.push(Move::A2(1));
        moves.extend((1..=l).map(Move::C1));
        moves.extend((1..=l).map(Move::C2));
    }
    let auts = group.automorphisms()?;
    moves.extend(
        automorphism_generators(group, &auts)
            .into_iter()
            .map(Move::Aut),
    );
    Ok((moves, h <= 1))
}
