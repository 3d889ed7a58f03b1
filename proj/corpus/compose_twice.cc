-- Copyright 2026 The ccdefun Authors. All Rights Reserved.
--
-- Licensed under the Apache License, Version 2.0 (the "License");
-- you may not use this file except in compliance with the License.
-- You may obtain a copy of the License at
--
--     http://www.apache.org/licenses/LICENSE-2.0
--
-- Unless required by applicable law or agreed to in writing, software
-- distributed under the License is distributed on an "AS IS" BASIS,
-- WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
-- See the License for the specific language governing permissions and
-- limitations under the License.

-- Composition of a function with itself, twice.
def compose : (f : Nat -> Nat) -> (g : Nat -> Nat) -> Nat -> Nat
  := fun (f : Nat -> Nat) (g : Nat -> Nat) (x : Nat) => f (g x);
def inc : Nat -> Nat := fun (n : Nat) => add n 1;
main compose (compose inc inc) (compose inc inc) 0;
