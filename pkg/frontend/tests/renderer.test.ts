import { describe, expect, it } from "vitest"

import { DrawRecord, FrameDelta, cssCursor } from "../src/protocol"
import { recordCommand, renderFrame } from "../src/renderer"

const rect: DrawRecord = {
  kind: "rect",
  id: 1,
  tag: "rect",
  x: 30,
  y: 30,
  w: 90,
  h: 60,
  color: "silver",
  fill: true,
}

const sector: DrawRecord = {
  kind: "ring-sector",
  id: 7,
  tag: "pie_chart",
  cx: 100,
  cy: 100,
  r0: 0,
  r1: 50,
  a0: 0.5,
  a1: 1.75,
  color: "khaki",
}

describe("recordCommand", () => {
  it("keeps rect geometry and fill", () => {
    const c = recordCommand(rect)
    expect(c).toEqual({ op: "rect", x: 30, y: 30, w: 90, h: 60, color: "silver", fill: true })
  })

  it("negates engine angles for canvas arcs", () => {
    const c = recordCommand(sector)
    if (c.op !== "ringSector") throw new Error(c.op)
    expect(c.startAngle).toBe(-0.5)
    expect(c.endAngle).toBe(-1.75)
    expect(c.r0).toBe(0)
    expect(c.r1).toBe(50)
  })

  it("anchors text at the bottom of its box", () => {
    const c = recordCommand({
      kind: "text",
      id: 3,
      tag: "text",
      x: 15,
      y: 108,
      w: 50,
      h: 14,
      text: "hello",
      color: "black",
      angle: 0,
    })
    if (c.op !== "text") throw new Error(c.op)
    expect(c.y).toBe(122)
  })

  it("rejects an unknown record kind", () => {
    const bad = { kind: "blob", id: 0, tag: "x" } as unknown as DrawRecord
    expect(() => recordCommand(bad)).toThrow("unknown draw record")
  })
})

describe("renderFrame", () => {
  it("keeps the draw order exactly as delivered", () => {
    const delta: FrameDelta = {
      draw_list: [sector, rect],
      cursor_hint: "default",
      menu_request: null,
    }
    const commands = renderFrame(delta)
    expect(commands.map((c) => c.op)).toEqual(["ringSector", "rect"])
  })
})

describe("cssCursor", () => {
  it("maps every engine hint to a css cursor", () => {
    expect(cssCursor("default")).toBe("default")
    expect(cssCursor("hand")).toBe("pointer")
    expect(cssCursor("size_all")).toBe("move")
    expect(cssCursor("size_ns")).toBe("ns-resize")
    expect(cssCursor("size_we")).toBe("ew-resize")
    expect(cssCursor("size_nwse")).toBe("nwse-resize")
    expect(cssCursor("size_nesw")).toBe("nesw-resize")
    expect(cssCursor("whatever")).toBe("default")
  })
})
