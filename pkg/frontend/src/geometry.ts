export interface Point {
  x: number;
  y: number;
}

/** Axis-aligned selection rectangle; corners may come in any order. */
export interface Rect {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export function normalizeRect(rect: Rect): Rect {
  return {
    x0: Math.min(rect.x0, rect.x1),
    y0: Math.min(rect.y0, rect.y1),
    x1: Math.max(rect.x0, rect.x1),
    y1: Math.max(rect.y0, rect.y1),
  };
}

export function pointInRect(p: Point, rect: Rect): boolean {
  const r = normalizeRect(rect);
  return p.x >= r.x0 && p.x <= r.x1 && p.y >= r.y0 && p.y <= r.y1;
}

/** Node ids whose layout positions fall inside the rectangle. */
export function verticesInRect(
  positions: ReadonlyMap<number, Point>, rect: Rect,
): Set<number> {
  const selected = new Set<number>();
  for (const [id, p] of positions) {
    if (pointInRect(p, rect)) selected.add(id);
  }
  return selected;
}

/** Symmetric difference split into additions and removals. */
export function diffSelection(
  current: ReadonlySet<number>, target: ReadonlySet<number>,
): { add: number[]; remove: number[] } {
  const add: number[] = [];
  const remove: number[] = [];
  for (const id of target) if (!current.has(id)) add.push(id);
  for (const id of current) if (!target.has(id)) remove.push(id);
  return { add, remove };
}
