//! Scan all connected graphs on at most five vertices for two-torsion in H1.

use csh::corpus::connected_graphs;
use csh::scan::{scan_graphs, ScanOptions, ScanRecord, ScanSummary};

fn main() {
    let graphs = connected_graphs(5);
    let results = scan_graphs(&graphs, &ScanOptions::default(), None);
    println!("{}", ScanRecord::csv_header(2, 1));
    for r in &results {
        match r {
            Ok(rec) => println!("{}", rec.csv_row()),
            Err(e) => eprintln!("error: {e}"),
        }
    }
    eprintln!("{:?}", ScanSummary::of(&results));
}
