import type { Point } from "./geometry.js";
import type { Counts, Pattern, SelectionResponse, UploadResponse } from "./types.js";

export interface DisplayedSelection {
  /** Op sequence number of the acknowledged response backing this display. */
  seq: number;
  counts: Counts;
  nActive: number;
  mActive: number;
}

/** All render-relevant state. Counts only ever enter through server
 * responses; stale selection responses (superseded sequence numbers) are
 * discarded so the display never regresses. */
export class ViewState {
  sessionId: string | null = null;
  graphN = 0;
  graphM = 0;
  nodes: number[] = [];
  edges: [number, number][] = [];
  positions = new Map<number, Point>();

  globalCounts: Counts | null = null;
  gfdGlobal: number[] | null = null;

  displayed: DisplayedSelection | null = null;
  gfdSelection: number[] | null = null;
  /** Selection implied by every op enqueued so far (acked or not). */
  intended = new Set<number>();

  pattern: Pattern | null = null;
  edgeWeights: number[] | null = null;

  error: string | null = null;
  retryPending = false;

  applyUpload(response: UploadResponse): void {
    this.sessionId = response.id;
    this.graphN = response.n;
    this.graphM = response.m;
    this.nodes = response.nodes ?? [];
    this.edges = response.edges ?? [];
    this.globalCounts = response.counts;
    this.displayed = null;
    this.gfdSelection = null;
    this.intended = new Set();
    this.pattern = null;
    this.edgeWeights = null;
    this.error = null;
    this.retryPending = false;
  }

  /** Returns true when the response advanced the display; false when it was
   * stale (an older op batch acknowledged after a newer one). */
  applySelectionResponse(response: SelectionResponse, clientSeq: number): boolean {
    if (this.displayed && clientSeq < this.displayed.seq) {
      return false;
    }
    this.displayed = {
      seq: clientSeq,
      counts: response.counts,
      nActive: response.n_active,
      mActive: response.m_active,
    };
    const gfd = (response as SelectionResponse & { gfd_k4_connected?: number[] })
      .gfd_k4_connected;
    if (gfd) this.gfdSelection = gfd;
    this.error = null;
    return true;
  }
}
