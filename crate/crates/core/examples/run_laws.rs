//! Runs every law over the default corpus and prints one line per law.

use idemring::laws::{run_all, Corpus, LawContext};
use idemring::Guards;

fn main() -> idemring::Result<()> {
    let corpus = Corpus::default_corpus(Guards::default())?;
    let ctx = LawContext::new(&corpus);
    for rep in run_all(&ctx)? {
        let t = rep.totals;
        println!(
            "{:<22} ✓{:<5} ✗{:<3} ·{:<5} –{:<3} {:>8.2?}",
            rep.law, t.holds, t.violated, t.not_applicable, t.skipped, rep.elapsed
        );
        for v in rep.violations().take(3) {
            println!("    {v:?}");
        }
        for n in &rep.notes {
            println!("    note: {n}");
        }
    }
    Ok(())
}
