import { readFileSync } from "node:fs"
import { fileURLToPath } from "node:url"

import { describe, expect, it } from "vitest"

import { parseCovers } from "../src/covers"

const golden = fileURLToPath(new URL("../../tests/data/covers_basic.txt", import.meta.url))

describe("parseCovers", () => {
  it("reads the checked-in cover render", () => {
    const commands = parseCovers(readFileSync(golden, "utf8"))
    expect(commands.length).toBeGreaterThan(10)
    const kinds = new Set(commands.map((c) => c.op))
    expect(kinds).toContain("coverCircle")
    expect(kinds).toContain("coverCapsule")
    expect(kinds).toContain("coverPolygon")
    for (const c of commands) {
      expect(c.color).toBe("red")
      expect(["white", "none"]).toContain(c.fill)
    }
  })

  it("keeps exact numbers from the text", () => {
    const text = [
      "covers v1",
      "cover 0 color=red",
      " node 1 circle cx=88.977775 cy=157.764571 r=5.000000 fill=white",
      " node 0 strip x1=130.000000 y1=155.000000 x2=190.000000 y2=155.000000 half=3.000000 fill=none",
    ].join("\n")
    const [circle, capsule] = parseCovers(text)
    if (circle?.op !== "coverCircle") throw new Error("expected a circle")
    expect(circle.cx).toBeCloseTo(88.977775, 6)
    expect(circle.fill).toBe("white")
    if (capsule?.op !== "coverCapsule") throw new Error("expected a capsule")
    expect(capsule.half).toBe(3)
    expect(capsule.fill).toBe("none")
  })

  it("parses polygon vertex lists", () => {
    const text = [
      "covers v1",
      "cover 2 color=red",
      " node 0 polygon pts=15.000000:108.000000,65.000000:108.000000,65.000000:122.000000 fill=none",
    ].join("\n")
    const [poly] = parseCovers(text)
    if (poly?.op !== "coverPolygon") throw new Error("expected a polygon")
    expect(poly.points).toHaveLength(3)
    expect(poly.points[0]).toEqual([15, 108])
  })

  it("rejects foreign headers and broken lines", () => {
    expect(() => parseCovers("covers v2\n")).toThrow("not a covers render")
    expect(() => parseCovers("covers v1\n node 0 blob a=1\n")).toThrow("bad cover")
    expect(() => parseCovers("covers v1\n node 0 circle cx=x cy=1 r=1 fill=none\n")).toThrow(
      "bad cover field cx",
    )
  })
})
