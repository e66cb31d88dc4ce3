use whill::{
    band_edges, classify_dirichlet, dirichlet_edge_prediction, dirichlet_eigenvalues,
    enumerate_clusters, solvable_spectrum, ClusterSet, DirichletLocation, PotentialFn,
    TransformedOperator, WHParams,
};

/// Floquet gap index of the solvable gap between labels `2i - 1` and `2i`.
fn floquet_gap(s: u32, i: usize) -> usize {
    if s % 2 == 1 {
        2 * i
    } else {
        2 * i - 1
    }
}

fn check(s: u32, alpha: f64) {
    let p = WHParams::new(alpha, s).unwrap();
    let spec = solvable_spectrum(&p).unwrap();
    let u = PotentialFn::whittaker_hill(&p);
    let top = spec.entries.last().unwrap().lambda;
    let report = band_edges(&u, top + 5.0, 1e-10).unwrap();
    let mut sets = vec![ClusterSet::empty(s)];
    sets.extend(enumerate_clusters(s, true));
    for set in sets {
        let predicted = dirichlet_edge_prediction(&set).unwrap();
        let v = TransformedOperator::new(&spec, &set)
            .unwrap()
            .potential()
            .unwrap();
        let gammas = dirichlet_eigenvalues(&v, report.lambda0 - 1.0, top + 1.0, 1e-10).unwrap();
        let located = classify_dirichlet(&gammas, &report, 1e-6);
        for (i, edge) in predicted.iter().enumerate() {
            let gap = floquet_gap(s, i + 1);
            let hit = located
                .iter()
                .find(|d| matches!(d.location, DirichletLocation::Edge { gap: g, .. } if g == gap))
                .unwrap_or_else(|| {
                    panic!(
                        "s={s} alpha={alpha} I={set}: no Dirichlet value at gap {gap}: {located:?}"
                    )
                });
            assert_eq!(
                hit.location,
                DirichletLocation::Edge { gap, edge: *edge },
                "s={s} alpha={alpha} I={set} gap {gap}"
            );
            let g = report.gap(gap).unwrap();
            let target = match edge {
                whill::GapEdge::Left => g.left,
                whill::GapEdge::Right => g.right,
            };
            assert!(
                (hit.gamma - target).abs() <= 1e-6,
                "s={s} I={set}: {} vs {target}",
                hit.gamma
            );
        }
    }
}

#[test]
fn odd_s_every_cluster() {
    for s in [3, 5] {
        for alpha in [0.5, 1.0] {
            check(s, alpha);
        }
    }
}

#[test]
fn even_s_every_cluster() {
    for s in [2, 4, 6] {
        for alpha in [0.5, 1.0] {
            check(s, alpha);
        }
    }
}
