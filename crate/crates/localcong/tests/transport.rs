use localcong::transport::{configurations, run_transport, LiftKind};

const SAMPLES: usize = 500;

fn suite(kind: LiftKind, seed: u64) {
    for (i, c) in configurations(kind).into_iter().enumerate() {
        let o = run_transport(kind, c, SAMPLES, seed + i as u64).unwrap();
        assert_eq!(o.inputs_congruent, SAMPLES, "{} {c:?}: sampler produced a non-congruent input", kind.name());
        assert_eq!(o.outputs_congruent, SAMPLES, "{} {c:?}: congruence not transported", kind.name());
        // perturbed inputs are mostly carried off the Eisenstein orbit; a
        // perturbation can be undone by the lift (e.g. by a root of unity under Sym^m)
        assert!(2 * o.negatives_rejected >= o.negatives, "{} {c:?}: {o:?}", kind.name());
    }
}

#[test]
fn isobaric_gl_transports() {
    suite(LiftKind::IsobaricGl, 100);
}

#[test]
fn sym_gl_transports() {
    suite(LiftKind::SymGl, 200);
}

#[test]
fn sym_gl_even_transports() {
    suite(LiftKind::SymGlEven, 300);
}

#[test]
fn endoscopic_u_transports() {
    suite(LiftKind::EndoscopicU, 400);
}

#[test]
fn sym_u_transports() {
    suite(LiftKind::SymU, 500);
}

#[test]
fn sym_u_even_transports() {
    suite(LiftKind::SymUEven, 600);
}

#[test]
fn yoshida_transports() {
    suite(LiftKind::Yoshida, 700);
}

#[test]
fn saito_kurokawa_transports() {
    suite(LiftKind::SaitoKurokawa, 800);
}

#[test]
fn sym_cube_transports() {
    suite(LiftKind::SymCube, 900);
}

#[test]
fn g2_transports() {
    suite(LiftKind::G2, 1000);
}

#[test]
fn suites_are_deterministic() {
    let c = configurations(LiftKind::EndoscopicU)[4];
    let a = run_transport(LiftKind::EndoscopicU, c, 100, 5).unwrap();
    let b = run_transport(LiftKind::EndoscopicU, c, 100, 5).unwrap();
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
}
