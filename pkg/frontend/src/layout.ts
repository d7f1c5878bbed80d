import type { Point } from "./geometry.js";

/** Small deterministic force-directed layout: spring forces along edges,
 * grid-bucketed short-range repulsion, mild centering. Deterministic given
 * the seed, so tests and reloads reproduce positions exactly. */

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width: number;
  height: number;
  seed?: number;
  springLength?: number;
  iterations?: number;
}

export class ForceLayout {
  readonly positions = new Map<number, Point>();
  private velocity = new Map<number, Point>();
  private readonly springLength: number;

  constructor(
    private nodes: number[],
    private edges: [number, number][],
    private options: LayoutOptions,
  ) {
    const rand = mulberry32(options.seed ?? 42);
    const { width, height } = options;
    const radius = 0.4 * Math.min(width, height);
    this.springLength = options.springLength
      ?? Math.max(18, radius / Math.max(2, Math.sqrt(nodes.length)) * 2.5);
    nodes.forEach((id, i) => {
      const angle = (2 * Math.PI * i) / Math.max(1, nodes.length);
      this.positions.set(id, {
        x: width / 2 + radius * Math.cos(angle) + (rand() - 0.5) * 10,
        y: height / 2 + radius * Math.sin(angle) + (rand() - 0.5) * 10,
      });
      this.velocity.set(id, { x: 0, y: 0 });
    });
  }

  /** One simulation step; returns total movement (for convergence checks). */
  step(temperature = 1): number {
    const { width, height } = this.options;
    const spring = this.springLength;
    const cell = spring * 1.6;
    const buckets = new Map<string, number[]>();
    for (const id of this.nodes) {
      const p = this.positions.get(id)!;
      const key = `${Math.floor(p.x / cell)}:${Math.floor(p.y / cell)}`;
      let bucket = buckets.get(key);
      if (!bucket) buckets.set(key, (bucket = []));
      bucket.push(id);
    }
    const force = new Map<number, Point>();
    for (const id of this.nodes) force.set(id, { x: 0, y: 0 });

    // Short-range repulsion within neighboring grid cells.
    for (const id of this.nodes) {
      const p = this.positions.get(id)!;
      const f = force.get(id)!;
      const cx = Math.floor(p.x / cell);
      const cy = Math.floor(p.y / cell);
      for (let dx = -1; dx <= 1; dx++) {
        for (let dy = -1; dy <= 1; dy++) {
          const bucket = buckets.get(`${cx + dx}:${cy + dy}`);
          if (!bucket) continue;
          for (const other of bucket) {
            if (other === id) continue;
            const q = this.positions.get(other)!;
            let ux = p.x - q.x;
            let uy = p.y - q.y;
            const dist2 = ux * ux + uy * uy;
            const dist = Math.sqrt(dist2) || 0.01;
            const push = (spring * spring) / (dist2 + 1);
            ux /= dist;
            uy /= dist;
            f.x += ux * push;
            f.y += uy * push;
          }
        }
      }
      // Centering.
      f.x += (width / 2 - p.x) * 0.01;
      f.y += (height / 2 - p.y) * 0.01;
    }

    // Springs along edges.
    for (const [u, v] of this.edges) {
      const p = this.positions.get(u)!;
      const q = this.positions.get(v)!;
      const ux = q.x - p.x;
      const uy = q.y - p.y;
      const dist = Math.sqrt(ux * ux + uy * uy) || 0.01;
      const pull = (dist - spring) * 0.05;
      const fx = (ux / dist) * pull;
      const fy = (uy / dist) * pull;
      const fu = force.get(u)!;
      const fv = force.get(v)!;
      fu.x += fx;
      fu.y += fy;
      fv.x -= fx;
      fv.y -= fy;
    }

    let moved = 0;
    for (const id of this.nodes) {
      const p = this.positions.get(id)!;
      const f = force.get(id)!;
      const vel = this.velocity.get(id)!;
      vel.x = (vel.x + f.x) * 0.5 * temperature;
      vel.y = (vel.y + f.y) * 0.5 * temperature;
      const speed = Math.sqrt(vel.x * vel.x + vel.y * vel.y);
      const cap = spring;
      const scale = speed > cap ? cap / speed : 1;
      p.x = Math.min(width - 4, Math.max(4, p.x + vel.x * scale));
      p.y = Math.min(height - 4, Math.max(4, p.y + vel.y * scale));
      moved += speed * scale;
    }
    return moved;
  }

  run(iterations?: number): void {
    const total = iterations ?? this.options.iterations ?? 120;
    for (let i = 0; i < total; i++) {
      this.step(1 - (0.7 * i) / total);
    }
  }
}
