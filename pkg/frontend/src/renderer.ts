// Turns a frame's draw list into canvas commands.  The list arrives
// deepest object first and is painted in that order, so the front of the
// engine's queue ends up on top.
//
// Engine angles are counterclockwise as seen on screen; canvas arcs grow
// clockwise because y points down.  Negating the angle and sweeping
// anticlockwise reproduces the engine's direction.

import { DrawRecord, FrameDelta } from "./protocol.js"

export type CanvasCommand =
  | { op: "rect"; x: number; y: number; w: number; h: number; color: string; fill: boolean }
  | { op: "circle"; cx: number; cy: number; r: number; color: string }
  | {
      op: "ringSector"
      cx: number
      cy: number
      r0: number
      r1: number
      startAngle: number
      endAngle: number
      color: string
    }
  | { op: "polyline"; points: [number, number][]; color: string }
  | { op: "text"; x: number; y: number; text: string; color: string; angle: number }

export function recordCommand(rec: DrawRecord): CanvasCommand {
  switch (rec.kind) {
    case "rect":
      return { op: "rect", x: rec.x, y: rec.y, w: rec.w, h: rec.h, color: rec.color, fill: rec.fill }
    case "circle":
      return { op: "circle", cx: rec.cx, cy: rec.cy, r: rec.r, color: rec.color }
    case "ring-sector":
      return {
        op: "ringSector",
        cx: rec.cx,
        cy: rec.cy,
        r0: rec.r0,
        r1: rec.r1,
        startAngle: -rec.a0,
        endAngle: -rec.a1,
        color: rec.color,
      }
    case "polyline":
      return { op: "polyline", points: rec.points, color: rec.color }
    case "text":
      return { op: "text", x: rec.x, y: rec.y + rec.h, text: rec.text, color: rec.color, angle: rec.angle }
    default: {
      const gone: never = rec
      throw new Error(`unknown draw record ${JSON.stringify(gone)}`)
    }
  }
}

export function renderFrame(delta: FrameDelta): CanvasCommand[] {
  return delta.draw_list.map(recordCommand)
}

export function paint(ctx: CanvasRenderingContext2D, commands: CanvasCommand[]) {
  for (const c of commands) {
    switch (c.op) {
      case "rect":
        if (c.fill) {
          ctx.fillStyle = c.color
          ctx.fillRect(c.x, c.y, c.w, c.h)
        }
        ctx.strokeStyle = c.fill ? "gray" : c.color
        ctx.strokeRect(c.x, c.y, c.w, c.h)
        break
      case "circle":
        ctx.fillStyle = c.color
        ctx.beginPath()
        ctx.arc(c.cx, c.cy, c.r, 0, 2 * Math.PI)
        ctx.fill()
        break
      case "ringSector":
        ctx.fillStyle = c.color
        ctx.beginPath()
        if (c.r0 > 0) {
          ctx.arc(c.cx, c.cy, c.r1, c.startAngle, c.endAngle, true)
          ctx.arc(c.cx, c.cy, c.r0, c.endAngle, c.startAngle, false)
        } else {
          ctx.moveTo(c.cx, c.cy)
          ctx.arc(c.cx, c.cy, c.r1, c.startAngle, c.endAngle, true)
        }
        ctx.closePath()
        ctx.fill()
        ctx.strokeStyle = "gray"
        ctx.stroke()
        break
      case "polyline": {
        ctx.strokeStyle = c.color
        ctx.beginPath()
        c.points.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)))
        ctx.stroke()
        break
      }
      case "text":
        ctx.fillStyle = c.color
        if (c.angle !== 0) {
          ctx.save()
          ctx.translate(c.x, c.y)
          ctx.rotate(-c.angle)
          ctx.fillText(c.text, 0, 0)
          ctx.restore()
        } else {
          ctx.fillText(c.text, c.x, c.y)
        }
        break
    }
  }
}
