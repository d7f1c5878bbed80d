/** Wire types for the graphlet service. Counts above 2^53 arrive as decimal
 * strings; everything that displays counts must handle both forms. */

export type Count = number | string;

export type Counts = Record<string, Count>;

export interface UploadResponse {
  id: string;
  n: number;
  m: number;
  counts: Counts;
  nodes?: number[];
  edges?: [number, number][];
}

export interface CountsResponse {
  id: string;
  n: number;
  m: number;
  counts: Counts;
}

export interface GfdResponse {
  id: string;
  k: number;
  scope: string;
  classes: string[];
  values: number[];
  is_zero: boolean;
}

export interface SelectionResponse {
  id: string;
  seq: number;
  client_seq?: number;
  n_active: number;
  m_active: number;
  counts: Counts;
  deltas: Counts;
}

export interface WeightsResponse {
  id: string;
  pattern: string;
  edges: [number, number][];
  weights: number[];
}

export interface SelectionOpWire {
  action: "add_vertex" | "remove_vertex" | "add_edge" | "remove_edge";
  vertex?: number;
  u?: number;
  v?: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: { line?: number } | null;
}

/** The eleven 4-node class ids in canonical order (connected first). */
export const K4_CLASSES = [
  "g4_1", "g4_2", "g4_3", "g4_4", "g4_5", "g4_6",
  "g4_7", "g4_8", "g4_9", "g4_10", "g4_11",
] as const;

export const CLASS_LABELS: Record<string, string> = {
  g2_1: "edge",
  g2_2: "2-node-independent",
  g3_1: "triangle",
  g3_2: "2-star",
  g3_3: "3-node-1-edge",
  g3_4: "3-node-independent",
  g4_1: "4-clique",
  g4_2: "4-chordalcycle",
  g4_3: "4-tailedtriangle",
  g4_4: "4-cycle",
  g4_5: "3-star",
  g4_6: "4-path",
  g4_7: "4-node-1-triangle",
  g4_8: "4-node-2-star",
  g4_9: "4-node-2-edge",
  g4_10: "4-node-1-edge",
  g4_11: "4-node-independent",
};

export const ALL_CLASS_IDS = Object.keys(CLASS_LABELS);

export const PATTERNS = ["star4", "clique4", "triangle", "cycle4"] as const;
export type Pattern = (typeof PATTERNS)[number];
