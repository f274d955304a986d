//! Finite groups as validated Cayley tables.
//!
//! Element ids are dense integers `0..order` with `0` the identity. The
//! multiplication table is checked on construction: Latin square, identity,
//! two-sided inverses, and associativity (exhaustively up to order 256,
//! by seeded triple sampling above that).

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rat_int, Rat};

pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;
const SAMPLED_ASSOC_TRIPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates and wraps an explicit multiplication table.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroupSpec("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::InvalidGroupSpec("table is not square".into()));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::ElementOutOfRange { id: v, order: n });
                }
                flat.push(v);
            }
        }
        // Latin square: every row and column is a permutation.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = flat[i * n + j];
                let c = flat[j * n + i];
                if seen_row[r] {
                    return Err(Error::NotLatinSquare { row: i, entry: r });
                }
                if seen_col[c] {
                    return Err(Error::NotLatinSquare { row: i, entry: c });
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        // Element 0 must be a two-sided identity.
        for j in 0..n {
            if flat[j] != j || flat[j * n] != j {
                return Err(Error::IdentityNotZero { at: j });
            }
        }
        // Associativity.
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = flat[a * n + b];
                    for c in 0..n {
                        if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.random_range(0..n);
                let b = rng.random_range(0..n);
                let c = rng.random_range(0..n);
                let ab = flat[a * n + b];
                let bc = flat[b * n + c];
                if flat[ab * n + c] != flat[a * n + bc] {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
        // Two-sided inverses.
        let mut inverse = vec![0usize; n];
        for x in 0..n {
            let mut found = None;
            for y in 0..n {
                if flat[x * n + y] == 0 && flat[y * n + x] == 0 {
                    found = Some(y);
                    break;
                }
            }
            inverse[x] = found.ok_or(Error::NoInverse { x })?;
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::LengthMismatch {
                        got: l.len(),
                        expected: n,
                    });
                }
                l
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Smallest k >= 1 with x^k = e.
    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Looks an element up by label, falling back to a numeric id.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        let t = name.trim();
        if let Some(i) = self.labels.iter().position(|l| l == t) {
            return Some(i);
        }
        t.parse::<usize>().ok().filter(|&i| i < self.order)
    }
}

/// The modular function of a finite group: the constant map x -> 1.
///
/// Exposed so downstream formulas can cite the modular factor explicitly
/// instead of silently dropping it.
pub fn modular_function(group: &FiniteGroup) -> Vec<Rat> {
    vec![rat_int(1); group.order()]
}

#[derive(Debug, Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    members: Vec<usize>,
}

impl Subgroup {
    pub fn new(group: &Arc<FiniteGroup>, members: &[usize]) -> Result<Subgroup> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::NotASubgroup {
                members: vec![],
                reason: "empty set".into(),
            });
        }
        for &x in &set {
            if x >= group.order() {
                return Err(Error::ElementOutOfRange {
                    id: x,
                    order: group.order(),
                });
            }
        }
        if !set.contains(&group.identity()) {
            return Err(Error::NotASubgroup {
                members: set.iter().copied().collect(),
                reason: "does not contain the identity".into(),
            });
        }
        for &x in &set {
            if !set.contains(&group.inv(x)) {
                return Err(Error::NotASubgroup {
                    members: set.iter().copied().collect(),
                    reason: format!("not closed under inverse at {x}"),
                });
            }
            for &y in &set {
                if !set.contains(&group.mul(x, y)) {
                    return Err(Error::NotASubgroup {
                        members: set.iter().copied().collect(),
                        reason: format!("not closed under product at ({x},{y})"),
                    });
                }
            }
        }
        Ok(Subgroup {
            group: Arc::clone(group),
            members: set.into_iter().collect(),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

pub fn is_subgroup(group: &Arc<FiniteGroup>, members: &[usize]) -> bool {
    Subgroup::new(group, members).is_ok()
}

/// True iff x h x^-1 lies in H for every x in G and h in H.
pub fn is_normal(group: &FiniteGroup, subgroup: &Subgroup) -> bool {
    for x in group.elements() {
        let xi = group.inv(x);
        for &h in subgroup.members() {
            if !subgroup.contains(group.mul(group.mul(x, h), xi)) {
                return false;
            }
        }
    }
    true
}

/// Partition of the element ids into double cosets HxH, ordered by their
/// minimal element. The class of the identity is H itself and comes first.
pub fn double_cosets(group: &FiniteGroup, subgroup: &Subgroup) -> Vec<Vec<usize>> {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut class = BTreeSet::new();
        for &h in subgroup.members() {
            let hx = group.mul(h, x);
            for &k in subgroup.members() {
                class.insert(group.mul(hx, k));
            }
        }
        for &y in &class {
            class_of[y] = idx;
        }
        classes.push(class.into_iter().collect());
    }
    classes
}

/// Enumerates all subgroups of a small group, as sorted member lists
/// ordered by (size, members).
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let trivial: BTreeSet<usize> = [group.identity()].into();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(trivial.iter().copied().collect());
    let mut frontier: Vec<BTreeSet<usize>> = vec![trivial];
    while let Some(s) = frontier.pop() {
        for g in group.elements() {
            if s.contains(&g) {
                continue;
            }
            let mut gens = s.clone();
            gens.insert(g);
            let closed = closure(group, &gens);
            let key: Vec<usize> = closed.iter().copied().collect();
            if found.insert(key) {
                frontier.push(closed);
            }
        }
    }
    let mut sets: Vec<Vec<usize>> = found.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.clone()));
    sets.into_iter()
        .map(|s| Subgroup::new(group, &s).expect("closure yields a subgroup"))
        .collect()
}

fn closure(group: &FiniteGroup, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = gens.clone();
    set.insert(group.identity());
    loop {
        let mut next = set.clone();
        for &a in &set {
            next.insert(group.inv(a));
            for &b in &set {
                next.insert(group.mul(a, b));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

// ---------------------------------------------------------------------------
// Group families and the JSON wire format.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Explicit {
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    /// Parses family strings like "cyclic:4", "dihedral:5", "symmetric:4",
    /// "quaternion:8", "product:cyclic:2,cyclic:3".
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("product:") {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| Error::UnknownFamily(s.into()))?;
            return Ok(GroupSpec::Product(
                Box::new(GroupSpec::parse(a)?),
                Box::new(GroupSpec::parse(b)?),
            ));
        }
        let (fam, arg) = t.split_once(':').ok_or_else(|| Error::UnknownFamily(s.into()))?;
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::UnknownFamily(s.into()))?;
        match fam.trim() {
            "cyclic" if n >= 1 => Ok(GroupSpec::Cyclic(n)),
            "dihedral" if n >= 1 => Ok(GroupSpec::Dihedral(n)),
            "symmetric" if (1..=5).contains(&n) => Ok(GroupSpec::Symmetric(n)),
            "quaternion" if n == 8 => Ok(GroupSpec::Quaternion8),
            _ => Err(Error::UnknownFamily(s.into())),
        }
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<Arc<FiniteGroup>> {
    let g = match spec {
        GroupSpec::Cyclic(n) => cyclic(*n)?,
        GroupSpec::Dihedral(n) => dihedral(*n)?,
        GroupSpec::Symmetric(n) => symmetric(*n)?,
        GroupSpec::Quaternion8 => quaternion8()?,
        GroupSpec::Product(a, b) => {
            let ga = build_group(a)?;
            let gb = build_group(b)?;
            direct_product(&ga, &gb)?
        }
        GroupSpec::Explicit { table, labels } => {
            FiniteGroup::from_table(table.clone(), labels.clone())?
        }
    };
    Ok(Arc::new(g))
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_table(table, Some(labels))
}

/// Dihedral group of order 2n. Ids 0..n are the rotations r^i (0 is the
/// identity), ids n..2n are the reflections s r^i.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    let ord = 2 * n;
    let mut table = vec![vec![0usize; ord]; ord];
    for a in 0..ord {
        for b in 0..ord {
            let (ra, fa) = if a < n { (a, false) } else { (a - n, true) };
            let (rb, fb) = if b < n { (b, false) } else { (b - n, true) };
            // (s^fa r^ra)(s^fb r^rb): pull s^fb through r^ra.
            let rot = if fb { (rb + n - ra % n) % n } else { (ra + rb) % n };
            let flip = fa ^ fb;
            table[a][b] = if flip { n + rot } else { rot };
        }
    }
    let mut labels: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
    labels.extend((0..n).map(|i| format!("s{i}")));
    FiniteGroup::from_table(table, Some(labels))
}

/// Symmetric group on n <= 5 points, permutations in lexicographic order
/// (so the identity is element 0), labelled in cycle notation.
fn symmetric(n: usize) -> Result<FiniteGroup> {
    let perms = all_permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let m = perms.len();
    let mut table = vec![vec![0usize; m]; m];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // (p * q)(x) = p(q(x))
            let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            table[i][j] = index(&comp);
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_table(table, Some(labels))
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
            if x == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Quaternion group {1, -1, i, -i, j, -j, k, -k}.
fn quaternion8() -> Result<FiniteGroup> {
    // element = (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
    let id = |sign: bool, axis: usize| (axis << 1) | sign as usize;
    let parts = |e: usize| (e & 1 == 1, e >> 1);
    let axis_mul = |a: usize, b: usize| -> (bool, usize) {
        match (a, b) {
            (0, x) => (false, x),
            (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0usize; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (sa, xa) = parts(a);
            let (sb, xb) = parts(b);
            let (sm, xm) = axis_mul(xa, xb);
            table[a][b] = id(sa ^ sb ^ sm, xm);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_table(table, Some(labels))
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![vec![0usize; n]; n];
    for xa in 0..na {
        for xb in 0..nb {
            for ya in 0..na {
                for yb in 0..nb {
                    table[xa * nb + xb][ya * nb + yb] = a.mul(xa, ya) * nb + b.mul(xb, yb);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for xa in 0..na {
        for xb in 0..nb {
            labels.push(format!("({},{})", a.label(xa), b.label(xb)));
        }
    }
    FiniteGroup::from_table(table, Some(labels))
}

/// JSON wire format: {"order": n, "table": [[...]], "labels": [...]}.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn to_json(&self) -> GroupJson {
        let n = self.order;
        GroupJson {
            order: n,
            table: (0..n)
                .map(|i| self.table[i * n..(i + 1) * n].to_vec())
                .collect(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn from_json(j: &GroupJson) -> Result<FiniteGroup> {
        if j.table.len() != j.order {
            return Err(Error::LengthMismatch {
                got: j.table.len(),
                expected: j.order,
            });
        }
        FiniteGroup::from_table(j.table.clone(), j.labels.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> Arc<FiniteGroup> {
        build_group(&GroupSpec::Cyclic(n)).unwrap()
    }

    fn s3() -> Arc<FiniteGroup> {
        build_group(&GroupSpec::Symmetric(3)).unwrap()
    }

    #[test]
    fn cyclic_1_is_trivial() {
        let g = zn(1);
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul(0, 0), 0);
    }

    #[test]
    fn cyclic_4_is_mod_addition() {
        let g = zn(4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g.mul(i, j), (i + j) % 4);
            }
        }
    }

    #[test]
    fn symmetric_3_has_three_involutions() {
        // Oracle: enumerate the permutations of {1,2,3} and count those of
        // order exactly 2 (three transpositions).
        let perms = all_permutations(3);
        let involutions = perms
            .iter()
            .filter(|p| {
                let sq: Vec<usize> = (0..3).map(|x| p[p[x]]).collect();
                sq == vec![0, 1, 2] && **p != vec![0, 1, 2]
            })
            .count();
        assert_eq!(involutions, 3);

        let g = s3();
        assert_eq!(g.order(), 6);
        let by_table = g.elements().filter(|&x| x != 0 && g.element_order(x) == 2).count();
        assert_eq!(by_table, involutions);
    }

    #[test]
    fn bad_tables_are_rejected() {
        // non-Latin-square
        let err = FiniteGroup::from_table(vec![vec![0, 0], vec![1, 1]], None).unwrap_err();
        assert!(matches!(err, Error::NotLatinSquare { .. }));
        // Latin square, identity at 0, but not associative (order 5 loop).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(t, None).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn subgroup_checks() {
        let z4 = zn(4);
        assert!(is_subgroup(&z4, &[0, 2]));
        assert!(!is_subgroup(&z4, &[0, 1])); // 1+1=2 not in the set
        let g = s3();
        // (12) has order 2: {e,(12)} is a subgroup.
        let t = g.element_by_name("(12)").unwrap();
        assert!(is_subgroup(&g, &[0, t]));
    }

    #[test]
    fn normality() {
        let z4 = zn(4);
        let h = Subgroup::new(&z4, &[0, 2]).unwrap();
        assert!(is_normal(&z4, &h));

        let g = s3();
        let t12 = g.element_by_name("(12)").unwrap();
        let h = Subgroup::new(&g, &[0, t12]).unwrap();
        // Oracle: conjugate (12) by (123) and check membership.
        let c = g.element_by_name("(123)").unwrap();
        let conj = g.mul(g.mul(c, t12), g.inv(c));
        assert!(!h.contains(conj));
        assert!(!is_normal(&g, &h));

        // A3 = rotations, index 2, normal.
        let a3: Vec<usize> = g.elements().filter(|&x| g.element_order(x) % 2 == 1).collect();
        let h = Subgroup::new(&g, &a3).unwrap();
        assert!(is_normal(&g, &h));
    }

    #[test]
    fn double_coset_shapes() {
        let g = s3();
        let t12 = g.element_by_name("(12)").unwrap();
        let h = Subgroup::new(&g, &[0, t12]).unwrap();
        let dc = double_cosets(&g, &h);
        let mut sizes: Vec<usize> = dc.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(dc[0], vec![0, t12]); // class of the identity is H

        let z4 = zn(4);
        let h = Subgroup::new(&z4, &[0, 2]).unwrap();
        let dc = double_cosets(&z4, &h);
        assert_eq!(dc.len(), 2);
        assert!(dc.iter().all(|c| c.len() == 2));

        let h = Subgroup::new(&z4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(double_cosets(&z4, &h).len(), 1);
    }

    #[test]
    fn modular_function_is_one() {
        for g in [zn(4), s3(), build_group(&GroupSpec::Quaternion8).unwrap()] {
            assert!(modular_function(&g).iter().all(|r| *r == rat_int(1)));
        }
    }

    #[test]
    fn inverse_antihomomorphism() {
        for g in [zn(6), s3(), build_group(&GroupSpec::Dihedral(4)).unwrap()] {
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(g.inv(g.mul(x, y)), g.mul(g.inv(y), g.inv(x)));
                }
            }
        }
    }

    #[test]
    fn known_subgroup_counts() {
        // Z6 has 4 subgroups, S3 has 6, Q8 has 6, S4 has 30.
        assert_eq!(all_subgroups(&zn(6)).len(), 4);
        assert_eq!(all_subgroups(&s3()).len(), 6);
        assert_eq!(all_subgroups(&build_group(&GroupSpec::Quaternion8).unwrap()).len(), 6);
        assert_eq!(all_subgroups(&build_group(&GroupSpec::Symmetric(4)).unwrap()).len(), 30);
    }

    #[test]
    fn product_and_json_roundtrip() {
        let spec = GroupSpec::parse("product:cyclic:2,cyclic:3").unwrap();
        let g = build_group(&spec).unwrap();
        assert_eq!(g.order(), 6);
        // Z2 x Z3 is cyclic of order 6: has an element of order 6.
        assert!(g.elements().any(|x| g.element_order(x) == 6));

        let j = g.to_json();
        let back = FiniteGroup::from_json(&j).unwrap();
        assert_eq!(*g, back);
    }

    #[test]
    fn family_parsing() {
        assert!(GroupSpec::parse("cyclic:4").is_ok());
        assert!(GroupSpec::parse("dihedral:5").is_ok());
        assert!(GroupSpec::parse("symmetric:6").is_err());
        assert!(GroupSpec::parse("quaternion:8").is_ok());
        assert!(GroupSpec::parse("quaternion:16").is_err());
        assert!(GroupSpec::parse("nonsense").is_err());
    }
}
