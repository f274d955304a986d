//! The fixed group catalog swept by the verification suites: every cyclic
//! group up to order 12, the dihedral groups D3..D6, S3, S4 and the
//! quaternion group, each paired with all of its subgroups.

use std::sync::Arc;

use crate::group::{all_subgroups, build_group, FiniteGroup, GroupSpec, Subgroup};

pub fn catalog_specs() -> Vec<GroupSpec> {
    let mut specs: Vec<GroupSpec> = (2..=12).map(GroupSpec::Cyclic).collect();
    specs.extend((3..=6).map(GroupSpec::Dihedral));
    specs.push(GroupSpec::Symmetric(3));
    specs.push(GroupSpec::Symmetric(4));
    specs.push(GroupSpec::Quaternion8);
    specs
}

pub fn catalog_groups() -> Vec<(GroupSpec, Arc<FiniteGroup>)> {
    catalog_specs()
        .into_iter()
        .map(|s| {
            let g = build_group(&s).expect("catalog spec is valid");
            (s, g)
        })
        .collect()
}

/// Every (G, H) pair in the catalog, H ranging over all subgroups of G
/// including the trivial and full ones.
pub fn catalog_pairs() -> Vec<(GroupSpec, Arc<FiniteGroup>, Subgroup)> {
    let mut pairs = Vec::new();
    for (spec, g) in catalog_groups() {
        for h in all_subgroups(&g) {
            pairs.push((spec.clone(), Arc::clone(&g), h));
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let groups = catalog_groups();
        assert_eq!(groups.len(), 11 + 4 + 2 + 1);
        let pairs = catalog_pairs();
        // every group contributes at least trivial and full subgroups
        assert!(pairs.len() >= 2 * groups.len());
        // S4 alone has 30 subgroups
        let s4: usize = pairs
            .iter()
            .filter(|(s, _, _)| matches!(s, GroupSpec::Symmetric(4)))
            .count();
        assert_eq!(s4, 30);
    }
}
