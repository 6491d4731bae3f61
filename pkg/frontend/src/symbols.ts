/**
 * Symbolic labels for the exact irrational constants that recur in spectra.
 * Matching a float against the table is a rendering concern only; the
 * decimal the service sent stays available as the tooltip.
 */

const PHI = (1 + Math.sqrt(5)) / 2;
const SQRT2 = Math.sqrt(2);
const EPS = 1e-9;

const TABLE: Array<[number, string]> = [
  [PHI, "φ"],
  [-PHI, "−φ"],
  [PHI - 1, "φ−1"],
  [1 - PHI, "1−φ"],
  [SQRT2, "√2"],
  [-SQRT2, "−√2"],
];

export function symbolFor(value: number): string | null {
  for (const [constant, label] of TABLE) {
    if (Math.abs(value - constant) <= EPS) return label;
  }
  return null;
}
