use mingraph_core::area::{horizontal_area, Domain, Rect};
use mingraph_core::graph_line::LineGraphSurface;
use mingraph_core::multiwedge::{MultiWedgeSurface, SingularHalflineSurface, WedgeConfig};
use mingraph_core::profile::BetaProfile;
use mingraph_core::surface::TGraph;
use mingraph_core::verifier::{oracle_descent, OracleInit};
use std::time::Instant;

fn ramp() -> BetaProfile {
    BetaProfile::piecewise_linear(vec![(-1.0, 0.0), (0.0, 0.0), (1.0, 1.0)]).unwrap()
}

fn main() {
    let rect = Rect::square(1.0);
    let n = 64;
    let iters: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50_000);
    let surfaces: Vec<(&str, Box<dyn TGraph>)> = vec![
        ("saddle", Box::new(LineGraphSurface::new(BetaProfile::constant(0.0)))),
        ("cone1", Box::new(LineGraphSurface::new(BetaProfile::constant(1.0)))),
        ("linear", Box::new(LineGraphSurface::new(BetaProfile::linear(1.0, 0.0).unwrap()))),
        ("ramp", Box::new(LineGraphSurface::new(ramp()))),
        ("cantor", Box::new(LineGraphSurface::new(BetaProfile::cantor(1.0, 0.0).unwrap()))),
        ("wedge3", Box::new(MultiWedgeSurface::make_cone(WedgeConfig::symmetric(3).unwrap()).unwrap())),
        ("halfline", Box::new(SingularHalflineSurface::new(BetaProfile::constant(1.0), 0.0))),
    ];
    for (name, s) in &surfaces {
        let q64 = horizontal_area(s.as_ref(), &Domain::rect(rect), n).unwrap().value;
        let q512 = horizontal_area(s.as_ref(), &Domain::rect(rect), 512).unwrap().value;
        let t0 = Instant::now();
        let fs = oracle_descent(s.as_ref(), &rect, n, iters, OracleInit::Surface).unwrap();
        let fz = oracle_descent(s.as_ref(), &rect, n, iters, OracleInit::Zero).unwrap();
        println!(
            "{name:9} q64={:.6} q512={:.6} | surf {:.6} (vs512 {:+.2e}) | zero {:.6} (vs512 {:+.2e}) | {:.1}s",
            q64, q512, fs, (fs - q512)/q512, fz, (fz - q512)/q512, t0.elapsed().as_secs_f64()
        );
    }
}
