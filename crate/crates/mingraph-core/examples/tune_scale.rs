use mingraph_core::area::{horizontal_area, Domain, Rect};
use mingraph_core::graph_line::LineGraphSurface;
use mingraph_core::multiwedge::SingularHalflineSurface;
use mingraph_core::profile::BetaProfile;
use mingraph_core::surface::TGraph;
use mingraph_core::verifier::{oracle_descent, OracleInit};

fn main() {
    let rect = Rect::square(1.0);
    let surfaces: Vec<(&str, Box<dyn TGraph>)> = vec![
        ("cantor", Box::new(LineGraphSurface::new(BetaProfile::cantor(1.0, 0.0).unwrap()))),
        ("halfline", Box::new(SingularHalflineSurface::new(BetaProfile::constant(1.0), 0.0))),
    ];
    for (name, s) in &surfaces {
        for (n, iters) in [(32usize, 30_000usize), (64, 50_000), (128, 80_000)] {
            let quad = horizontal_area(s.as_ref(), &Domain::rect(rect), 512).unwrap();
            let best = oracle_descent(s.as_ref(), &rect, n, iters, OracleInit::Surface).unwrap();
            println!(
                "{name:9} n={n:4} quad(512)={:.6} oracle={:.6} rel={:+.3e}",
                quad.value, best, (best - quad.value) / quad.value
            );
        }
    }
}
