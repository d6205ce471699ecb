// Parses the engine's textual cover render into overlay commands, the
// developer switch that shows where every node actually senses.

export type OverlayCommand =
  | { op: "coverCircle"; cx: number; cy: number; r: number; color: string; fill: string }
  | {
      op: "coverCapsule"
      x1: number
      y1: number
      x2: number
      y2: number
      half: number
      color: string
      fill: string
    }
  | { op: "coverPolygon"; points: [number, number][]; color: string; fill: string }

function fields(parts: string[]): Map<string, string> {
  const out = new Map<string, string>()
  for (const part of parts) {
    const eq = part.indexOf("=")
    if (eq > 0) out.set(part.slice(0, eq), part.slice(eq + 1))
  }
  return out
}

function num(f: Map<string, string>, key: string): number {
  const raw = f.get(key)
  const value = raw === undefined ? NaN : Number(raw)
  if (!Number.isFinite(value)) throw new Error(`bad cover field ${key}`)
  return value
}

export function parseCovers(text: string): OverlayCommand[] {
  const lines = text.split("\n")
  if (lines[0] !== "covers v1") throw new Error("not a covers render")
  const out: OverlayCommand[] = []
  let color = "red"
  for (const line of lines.slice(1)) {
    if (line === "") continue
    const parts = line.trim().split(" ")
    if (parts[0] === "cover") {
      color = fields(parts).get("color") ?? "red"
      continue
    }
    if (parts[0] !== "node") throw new Error(`bad cover line: ${line}`)
    const f = fields(parts)
    const fill = f.get("fill") ?? "none"
    switch (parts[2]) {
      case "circle":
        out.push({ op: "coverCircle", cx: num(f, "cx"), cy: num(f, "cy"), r: num(f, "r"), color, fill })
        break
      case "strip":
        out.push({
          op: "coverCapsule",
          x1: num(f, "x1"),
          y1: num(f, "y1"),
          x2: num(f, "x2"),
          y2: num(f, "y2"),
          half: num(f, "half"),
          color,
          fill,
        })
        break
      case "polygon": {
        const pts = f.get("pts") ?? ""
        const points = pts.split(",").map((pair): [number, number] => {
          const [x, y] = pair.split(":").map(Number)
          if (x === undefined || y === undefined || !Number.isFinite(x) || !Number.isFinite(y))
            throw new Error(`bad polygon point ${pair}`)
          return [x, y]
        })
        out.push({ op: "coverPolygon", points, color, fill })
        break
      }
      default:
        throw new Error(`bad cover node kind: ${parts[2]}`)
    }
  }
  return out
}

export function paintOverlay(ctx: CanvasRenderingContext2D, commands: OverlayCommand[]) {
  for (const c of commands) {
    switch (c.op) {
      case "coverCircle":
        ctx.beginPath()
        ctx.arc(c.cx, c.cy, c.r, 0, 2 * Math.PI)
        if (c.fill !== "none") {
          ctx.fillStyle = c.fill
          ctx.fill()
        }
        ctx.strokeStyle = c.color
        ctx.stroke()
        break
      case "coverCapsule": {
        const theta = Math.atan2(c.y2 - c.y1, c.x2 - c.x1)
        ctx.beginPath()
        ctx.arc(c.x2, c.y2, c.half, theta - Math.PI / 2, theta + Math.PI / 2, false)
        ctx.arc(c.x1, c.y1, c.half, theta + Math.PI / 2, theta + (3 * Math.PI) / 2, false)
        ctx.closePath()
        if (c.fill !== "none") {
          ctx.fillStyle = c.fill
          ctx.fill()
        }
        ctx.strokeStyle = c.color
        ctx.stroke()
        break
      }
      case "coverPolygon": {
        ctx.beginPath()
        c.points.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)))
        ctx.closePath()
        if (c.fill !== "none") {
          ctx.fillStyle = c.fill
          ctx.fill()
        }
        ctx.strokeStyle = c.color
        ctx.stroke()
        break
      }
    }
  }
}
