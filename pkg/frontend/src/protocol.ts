// Message shapes shared with the engine bridge.  The frontend never
// computes geometry; everything on screen comes from these records.

export type Button = "L" | "R"
export type PointerKind = "down" | "move" | "up" | "dblclick"

export interface PointerMessage {
  op: "pointer"
  kind: PointerKind
  x: number
  y: number
  button?: Button
}

export interface RectRecord {
  kind: "rect"
  id: number
  tag: string
  x: number
  y: number
  w: number
  h: number
  color: string
  fill: boolean
}

export interface CircleRecord {
  kind: "circle"
  id: number
  tag: string
  cx: number
  cy: number
  r: number
  color: string
}

// Angles are engine convention: y grows down the screen, angles run
// counterclockwise from the positive x axis.  r0 = 0 draws a full sector.
export interface RingSectorRecord {
  kind: "ring-sector"
  id: number
  tag: string
  cx: number
  cy: number
  r0: number
  r1: number
  a0: number
  a1: number
  color: string
}

export interface PolylineRecord {
  kind: "polyline"
  id: number
  tag: string
  points: [number, number][]
  color: string
}

export interface TextRecord {
  kind: "text"
  id: number
  tag: string
  x: number
  y: number
  w: number
  h: number
  text: string
  color: string
  angle: number
}

export type DrawRecord =
  | RectRecord
  | CircleRecord
  | RingSectorRecord
  | PolylineRecord
  | TextRecord

export interface MenuRequest {
  tag: string
  point: [number, number]
  path: number[]
  reason: "menu" | "tune"
}

export interface FrameDelta {
  draw_list: DrawRecord[]
  cursor_hint: string
  menu_request: MenuRequest | null
}

export interface SensedHit {
  queue_index: number
  object_id: number
  node_ordinal: number
  cursor: string
  catchable: boolean
}

export type MenuCommand =
  | "hide"
  | "unveil"
  | "fix"
  | "unfix"
  | "level-up"
  | "level-down"
  | "level-top"
  | "level-bottom"
  | "duplicate"
  | "delete"
  | "save-object"
  | "restore-at"
  | "save-view"
  | "load-view"
  | "default-view"

export interface MenuMessage {
  op: "menu"
  command: MenuCommand
  path: number[]
  record?: string
  point?: [number, number]
}

export type EngineRequest =
  | PointerMessage
  | MenuMessage
  | { op: "snapshot" }
  | { op: "load"; scene: string }
  | { op: "sensed"; x: number; y: number }
  | { op: "frame" }
  | { op: "covers" }
  | { op: "quit" }

export type EngineReply =
  | FrameDelta
  | (FrameDelta & { record: string })
  | { scene: string }
  | { hit: SensedHit | null }
  | { covers: string }
  | { error: string }

// What the app needs from any channel to the engine: strictly ordered
// request/reply pairs.  The node client spawns the bridge; a browser
// deployment tunnels the same lines over a socket.
export interface Transport {
  send(msg: EngineRequest): Promise<EngineReply>
  close(): Promise<void>
}

const CSS_CURSORS: Record<string, string> = {
  default: "default",
  hand: "pointer",
  size_all: "move",
  size_ns: "ns-resize",
  size_we: "ew-resize",
  size_nwse: "nwse-resize",
  size_nesw: "nesw-resize",
}

export function cssCursor(hint: string): string {
  return CSS_CURSORS[hint] ?? "default"
}
