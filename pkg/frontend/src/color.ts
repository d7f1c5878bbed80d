/** Quantile color scale for edge weights: equal-population bins over the
 * observed weights, low-to-high palette. */

export const EDGE_PALETTE = [
  "#c6dbef", "#9ecae1", "#6baed6", "#3182bd", "#08519c",
];

export const NODE_PALETTE = [
  "#fee5d9", "#fcae91", "#fb6a4a", "#de2d26", "#a50f15",
];

export interface QuantileScale {
  /** Upper bound (inclusive) of each bin except the last, ascending. */
  breaks: number[];
  colors: string[];
  colorOf(value: number): string;
  min: number;
  max: number;
}

export function quantileScale(values: number[], palette: string[] = EDGE_PALETTE): QuantileScale {
  if (values.length === 0) {
    return { breaks: [], colors: [palette[0]], colorOf: () => palette[0], min: 0, max: 0 };
  }
  const sorted = [...values].sort((a, b) => a - b);
  const min = sorted[0];
  const max = sorted[sorted.length - 1];
  const bins = palette.length;
  const distinct = [...new Set(sorted)];
  let breaks: number[];
  if (distinct.length <= bins) {
    // Few distinct weights (heavy ties): one bin per distinct value, so a
    // rare outlier class still gets its own color.
    breaks = distinct.slice(0, -1);
  } else {
    breaks = [];
    for (let i = 1; i < bins; i++) {
      breaks.push(sorted[Math.min(sorted.length - 1, Math.floor((i * sorted.length) / bins))]);
    }
  }
  const colorOf = (value: number): string => {
    let bin = 0;
    while (bin < breaks.length && value > breaks[bin]) bin++;
    return palette[Math.min(bin, palette.length - 1)];
  };
  return { breaks, colors: [...palette], colorOf, min, max };
}

/** Per-vertex triangle participation derived from per-edge triangle counts:
 * each triangle at a vertex is seen from its two incident edges, hence the
 * shared factor of 2. Visualization mapping of server-provided weights. */
export function vertexTriangleWeights(
  edges: [number, number][], triWeights: number[],
): Map<number, number> {
  const sums = new Map<number, number>();
  edges.forEach(([u, v], i) => {
    sums.set(u, (sums.get(u) ?? 0) + triWeights[i]);
    sums.set(v, (sums.get(v) ?? 0) + triWeights[i]);
  });
  const out = new Map<number, number>();
  for (const [id, total] of sums) out.set(id, total / 2);
  return out;
}
