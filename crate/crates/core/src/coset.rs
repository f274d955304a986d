//! Left and right coset spaces with their canonical projections, the
//! G-action, and the inversion homeomorphism between the two sides.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct CosetSpace {
    side: Side,
    group: Arc<FiniteGroup>,
    subgroup: Subgroup,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// One representative per coset; the representative is the minimal
    /// element id in the coset, and coset 0 is H itself.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Elements of coset `c`, sorted by id.
    pub fn members(&self, c: usize) -> Vec<usize> {
        self.group
            .elements()
            .filter(|&x| self.coset_of[x] == c)
            .collect()
    }

    pub fn same_pair(&self, other: &CosetSpace) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            && self.subgroup.members() == other.subgroup.members()
    }
}

/// Builds the coset decomposition of G by H on the requested side.
pub fn build_cosets(group: &Arc<FiniteGroup>, subgroup: &Subgroup, side: Side) -> CosetSpace {
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x); // x is minimal in its coset: smaller members were seen first
        for &h in subgroup.members() {
            let y = match side {
                Side::Left => group.mul(x, h),
                Side::Right => group.mul(h, x),
            };
            coset_of[y] = c;
        }
    }
    CosetSpace {
        side,
        group: Arc::clone(group),
        subgroup: subgroup.clone(),
        reps,
        coset_of,
    }
}

/// The G-action on the coset space: x.(yH) = xyH for left spaces,
/// (Hy).x = Hyx for right spaces.
pub fn act(space: &CosetSpace, x: usize, c: usize) -> Result<usize> {
    let n = space.group.order();
    if x >= n {
        return Err(Error::ElementOutOfRange { id: x, order: n });
    }
    if c >= space.len() {
        return Err(Error::ElementOutOfRange {
            id: c,
            order: space.len(),
        });
    }
    let r = space.reps[c];
    let y = match space.side {
        Side::Left => space.group.mul(x, r),
        Side::Right => space.group.mul(r, x),
    };
    Ok(space.coset_of[y])
}

/// The homeomorphism Q : G/H -> H\G, xH -> Hx^-1.
pub fn q_map(left: &CosetSpace, right: &CosetSpace, c: usize) -> Result<usize> {
    if left.side != Side::Left || right.side != Side::Right || !left.same_pair(right) {
        return Err(Error::DomainMismatch);
    }
    let x = left.reps[c];
    Ok(right.coset_of[left.group.inv(x)])
}

/// The inverse homeomorphism, Hx -> x^-1 H.
pub fn q_map_inv(right: &CosetSpace, left: &CosetSpace, c: usize) -> Result<usize> {
    if left.side != Side::Left || right.side != Side::Right || !left.same_pair(right) {
        return Err(Error::DomainMismatch);
    }
    let x = right.reps[c];
    Ok(left.coset_of[right.group.inv(x)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn z4_h02() -> (Arc<FiniteGroup>, Subgroup) {
        let g = build_group(&GroupSpec::Cyclic(4)).unwrap();
        let h = Subgroup::new(&g, &[0, 2]).unwrap();
        (g, h)
    }

    fn s3_h12() -> (Arc<FiniteGroup>, Subgroup) {
        let g = build_group(&GroupSpec::Symmetric(3)).unwrap();
        let t = g.element_by_name("(12)").unwrap();
        let h = Subgroup::new(&g, &[0, t]).unwrap();
        (g, h)
    }

    #[test]
    fn z4_left_cosets() {
        let (g, h) = z4_h02();
        let s = build_cosets(&g, &h, Side::Left);
        assert_eq!(s.len(), 2);
        assert_eq!(s.reps(), &[0, 1]);
        assert_eq!(s.coset_of(2), 0);
        assert_eq!(s.coset_of(3), 1);
    }

    #[test]
    fn s3_left_cosets() {
        let (g, h) = s3_h12();
        let s = build_cosets(&g, &h, Side::Left);
        assert_eq!(s.len(), 3);
        assert_eq!(s.rep(0), 0);
        // xH = yH iff x^-1 y in H
        for x in g.elements() {
            for y in g.elements() {
                let same = s.coset_of(x) == s.coset_of(y);
                assert_eq!(same, h.contains(g.mul(g.inv(x), y)));
            }
        }
    }

    #[test]
    fn whole_group_single_coset() {
        let g = build_group(&GroupSpec::Dihedral(3)).unwrap();
        let h = Subgroup::new(&g, &(0..6).collect::<Vec<_>>()).unwrap();
        let s = build_cosets(&g, &h, Side::Left);
        assert_eq!(s.len(), 1);
        assert_eq!(s.rep(0), 0);
    }

    #[test]
    fn action_axioms() {
        let (g, h) = s3_h12();
        let s = build_cosets(&g, &h, Side::Left);
        for c in 0..s.len() {
            assert_eq!(act(&s, 0, c).unwrap(), c);
            for x in g.elements() {
                for y in g.elements() {
                    let xy = g.mul(x, y);
                    assert_eq!(
                        act(&s, xy, c).unwrap(),
                        act(&s, x, act(&s, y, c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn action_examples_and_transitivity() {
        let (g, h) = z4_h02();
        let s = build_cosets(&g, &h, Side::Left);
        assert_eq!(act(&s, 1, s.coset_of(0)).unwrap(), s.coset_of(1));

        let (g, h) = s3_h12();
        let s = build_cosets(&g, &h, Side::Left);
        let r = g.element_by_name("(123)").unwrap();
        assert_eq!(act(&s, r, s.coset_of(0)).unwrap(), s.coset_of(r));
        // transitivity
        for c in 0..s.len() {
            for d in 0..s.len() {
                assert!(g.elements().any(|x| act(&s, x, c).unwrap() == d));
            }
        }
    }

    #[test]
    fn q_map_bijection() {
        for (g, h) in [z4_h02(), s3_h12()] {
            let l = build_cosets(&g, &h, Side::Left);
            let r = build_cosets(&g, &h, Side::Right);
            let mut seen = vec![false; r.len()];
            for c in 0..l.len() {
                let d = q_map(&l, &r, c).unwrap();
                assert!(!seen[d]);
                seen[d] = true;
                assert_eq!(q_map_inv(&r, &l, d).unwrap(), c);
            }
        }
    }

    #[test]
    fn q_map_examples() {
        let (g, h) = z4_h02();
        let l = build_cosets(&g, &h, Side::Left);
        let r = build_cosets(&g, &h, Side::Right);
        // Q(1+H) = H+3 = H+1 since 3-1=2 in H.
        assert_eq!(q_map(&l, &r, l.coset_of(1)).unwrap(), r.coset_of(1));
        assert_eq!(q_map(&l, &r, l.coset_of(0)).unwrap(), r.coset_of(0));

        let (g, h) = s3_h12();
        let l = build_cosets(&g, &h, Side::Left);
        let r = build_cosets(&g, &h, Side::Right);
        let c123 = g.element_by_name("(123)").unwrap();
        let c132 = g.element_by_name("(132)").unwrap();
        assert_eq!(
            q_map(&l, &r, l.coset_of(c123)).unwrap(),
            r.coset_of(c132)
        );
    }

    #[test]
    fn normal_h_sides_coincide() {
        let (g, h) = z4_h02();
        let l = build_cosets(&g, &h, Side::Left);
        let r = build_cosets(&g, &h, Side::Right);
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(
                    l.coset_of(x) == l.coset_of(y),
                    r.coset_of(x) == r.coset_of(y)
                );
            }
        }
    }

    #[test]
    fn double_cosets_union_of_cosets_and_normality() {
        use crate::group::{double_cosets, is_normal};
        for (g, h) in [z4_h02(), s3_h12()] {
            let l = build_cosets(&g, &h, Side::Left);
            let r = build_cosets(&g, &h, Side::Right);
            let dc = double_cosets(&g, &h);
            // double cosets are unions of left cosets and of right cosets
            for class in &dc {
                for space in [&l, &r] {
                    for &x in class {
                        let members = space.members(space.coset_of(x));
                        assert!(members.iter().all(|&m| class.contains(&m)));
                    }
                }
            }
            // normal iff every HxH is a single left coset
            let every_single = dc
                .iter()
                .all(|class| *class == l.members(l.coset_of(class[0])));
            assert_eq!(every_single, is_normal(&g, &h));
        }
    }
}
